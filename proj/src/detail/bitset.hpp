// Copyright 2026 The dbrvc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc::detail {

class DynamicBitset {
 public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }

    bool intersects(const DynamicBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    /// this ⊆ o
    bool subset_of(const DynamicBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    /// (this ∩ mask) ⊆ o
    bool subset_of_within(const DynamicBitset& o, const DynamicBitset& mask) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & mask.words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    std::size_t count_and(const DynamicBitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        }
        return c;
    }

    DynamicBitset& operator&=(const DynamicBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    DynamicBitset& operator|=(const DynamicBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

 private:
    void trim() {
        if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::vector<DynamicBitset> adjacency_rows(const Graph& g) {
    std::vector<DynamicBitset> rows(g.num_vertices(), DynamicBitset(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v : g.neighbors(u)) rows[u].set(v);
    }
    return rows;
}

}  // namespace dbrvc::detail
