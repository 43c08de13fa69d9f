#pragma once

#include "norden/poly.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

namespace norden {

/// Dense array of Poly with `Rank` indices, each ranging over 0..dim-1.
template <std::size_t Rank>
class Tensor {
public:
  using Index = std::array<std::size_t, Rank>;

  Tensor() = default;
  explicit Tensor(std::size_t dim) : dim_(dim), data_(size_for(dim)) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  template <class... I>
  Poly& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Poly& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  Poly& operator[](const Index& idx) { return data_[offset(idx)]; }
  const Poly& operator[](const Index& idx) const { return data_[offset(idx)]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
  }

  /// Calls f(index, value) for every component in row-major order.
  template <class F>
  void for_each(F&& f) const {
    Index idx{};
    for (std::size_t flat = 0; flat < data_.size(); ++flat) {
      std::size_t rest = flat;
      for (std::size_t r = Rank; r-- > 0;) {
        idx[r] = rest % dim_;
        rest /= dim_;
      }
      f(static_cast<const Index&>(idx), data_[flat]);
    }
  }

  const std::vector<Poly>& data() const noexcept { return data_; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  static std::size_t size_for(std::size_t dim) {
    std::size_t s = 1;
    for (std::size_t r = 0; r < Rank; ++r) s *= dim;
    return s;
  }
  std::size_t offset(const Index& idx) const {
    std::size_t o = 0;
    for (std::size_t r = 0; r < Rank; ++r) o = o * dim_ + idx[r];
    return o;
  }

  std::size_t dim_ = 0;
  std::vector<Poly> data_;
};

using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;
using Tensor5 = Tensor<5>;

/// Components of a 1-form in the basis dual to X_1..X_dim.
using Covector = std::vector<Poly>;

} // namespace norden
