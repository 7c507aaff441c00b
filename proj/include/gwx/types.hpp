#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iterator>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwx {

// All numeric work is double precision on dense row-major storage.
using Scalar = double;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Shape/size violations detected when wiring operations together.
struct DimError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A forward op produced NaN/Inf, or an optimizer saw a non-finite gradient.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An API precondition was violated (caller bug, not data).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Modality : int { attr = 0, image = 1, text = 2 };

inline constexpr int kNumModalities = 3;

std::string_view to_string(Modality m);
Modality modality_from_string(std::string_view s);

inline Modality modality_at(int i) {
  if (i < 0 || i >= kNumModalities) throw ContractError("modality index out of range");
  return static_cast<Modality>(i);
}

// Small ordered set of modalities. Iteration is always ascending in the
// enum order, which keeps every loop over modalities deterministic.
class ModalitySet {
 public:
  constexpr ModalitySet() = default;
  constexpr explicit ModalitySet(uint8_t bits) : bits_(bits) {}

  static constexpr ModalitySet all() { return ModalitySet{(1u << kNumModalities) - 1}; }

  static ModalitySet of(std::initializer_list<Modality> ms) {
    ModalitySet s;
    for (Modality m : ms) s = s.with(m);
    return s;
  }

  constexpr bool contains(Modality m) const { return (bits_ >> static_cast<int>(m)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < kNumModalities; ++i) n += (bits_ >> i) & 1u;
    return n;
  }

  constexpr ModalitySet with(Modality m) const {
    return ModalitySet{static_cast<uint8_t>(bits_ | (1u << static_cast<int>(m)))};
  }
  constexpr ModalitySet without(Modality m) const {
    return ModalitySet{static_cast<uint8_t>(bits_ & ~(1u << static_cast<int>(m)))};
  }
  constexpr ModalitySet complement_in(ModalitySet universe) const {
    return ModalitySet{static_cast<uint8_t>(universe.bits_ & ~bits_)};
  }
  constexpr ModalitySet intersect(ModalitySet other) const {
    return ModalitySet{static_cast<uint8_t>(bits_ & other.bits_)};
  }

  constexpr uint8_t bits() const { return bits_; }
  constexpr bool operator==(const ModalitySet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Modality;
    using difference_type = std::ptrdiff_t;
    using pointer = const Modality*;
    using reference = Modality;

    iterator(uint8_t bits, int pos) : bits_(bits), pos_(pos) { advance(); }
    Modality operator*() const { return static_cast<Modality>(pos_); }
    iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    void advance() {
      while (pos_ < kNumModalities && !((bits_ >> pos_) & 1u)) ++pos_;
    }
    uint8_t bits_;
    int pos_;
  };

  iterator begin() const { return iterator(bits_, 0); }
  iterator end() const { return iterator(bits_, kNumModalities); }

 private:
  uint8_t bits_ = 0;
};

std::string to_string(ModalitySet s);

}  // namespace gwx
