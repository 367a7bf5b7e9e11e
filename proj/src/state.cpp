// Copyright 2026 The mbqc-flow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbqc/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mbqc {

BatchedState::BatchedState(std::span<const Vertex> inputs, const kernels::KernelTable &table)
    : table_(&table), live_(inputs.begin(), inputs.end()), input_count_(static_cast<unsigned>(inputs.size())) {
    if (input_count_ > kMaxInputs) {
        throw std::length_error("too many input qubits for a dense branch map");
    }
    const std::size_t dim = std::size_t{1} << input_count_;
    amps_.assign(dim * dim, Complex(0));
    for (std::size_t c = 0; c < dim; c++) {
        amps_[(c << input_count_) | c] = 1;
    }
}

unsigned BatchedState::bit_of(Vertex q) const {
    auto it = std::find(live_.begin(), live_.end(), q);
    if (it == live_.end()) {
        throw std::logic_error("qubit " + std::to_string(q) + " is not live");
    }
    return static_cast<unsigned>(live_.end() - it - 1);
}

bool BatchedState::is_live(Vertex q) const {
    return std::find(live_.begin(), live_.end(), q) != live_.end();
}

void BatchedState::prepare(Vertex q, Complex a0, Complex a1) {
    if (is_live(q)) {
        throw std::logic_error("qubit " + std::to_string(q) + " is already live");
    }
    scratch_.resize(amps_.size() * 2);
    table_->extend(amps_.data(), scratch_.data(), amps_.size(), a0, a1);
    std::swap(amps_, scratch_);
    live_.push_back(q);
}

void BatchedState::apply(Vertex q, const kernels::Gate2 &g) {
    table_->apply_1q(amps_.data(), amps_.size(), bit_of(q), g);
}

void BatchedState::cz(Vertex a, Vertex b) {
    unsigned ba = bit_of(a), bb = bit_of(b);
    if (ba == bb) {
        throw std::logic_error("controlled-Z needs two distinct qubits");
    }
    table_->apply_cz(amps_.data(), amps_.size(), ba, bb);
}

void BatchedState::project(Vertex q, Complex c0, Complex c1) {
    unsigned bit = bit_of(q);
    scratch_.resize(amps_.size() / 2);
    table_->contract(amps_.data(), scratch_.data(), amps_.size(), bit, c0, c1);
    std::swap(amps_, scratch_);
    live_.erase(live_.end() - bit - 1);
}

Matrix BatchedState::to_matrix(std::span<const Vertex> outputs) const {
    if (outputs.size() != live_.size()) {
        throw std::logic_error("output list does not match the live qubits");
    }
    const std::size_t n = live_.size();
    // target_bit[b]: row bit that live bit b lands on.
    std::vector<unsigned> target_bit(n);
    for (std::size_t k = 0; k < n; k++) {
        auto it = std::find(outputs.begin(), outputs.end(), live_[k]);
        if (it == outputs.end()) {
            throw std::logic_error("live qubit " + std::to_string(live_[k]) + " missing from output list");
        }
        target_bit[n - 1 - k] = static_cast<unsigned>(outputs.end() - it - 1);
    }
    const std::size_t rows = std::size_t{1} << n;
    const std::size_t cols = std::size_t{1} << input_count_;
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; r++) {
        std::size_t row = 0;
        for (std::size_t b = 0; b < n; b++) {
            if ((r >> b) & 1) {
                row |= std::size_t{1} << target_bit[b];
            }
        }
        for (std::size_t c = 0; c < cols; c++) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = amps_[(c << n) | r];
        }
    }
    return m;
}

}  // namespace mbqc
