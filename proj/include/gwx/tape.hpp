#pragma once

#include "gwx/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace gwx {

// Reverse-mode differentiation on a per-step tape.
//
// A Tape records every operation in topological order; Var is a cheap handle
// into it. Ops are free functions so model code reads like plain linear
// algebra:
//
//   Tape t;
//   Var x = t.input(batch);
//   Var w = t.input(weights, /*requires_grad=*/true);
//   Var y = tanh(add(matmul(x, w), bias));
//
// backward() walks the tape once in reverse, returns gradients for the
// requested leaves, and clears the tape. Every forward op checks its output
// for NaN/Inf and throws NumericError on the first non-finite value.

class Tape;

struct Var {
  Tape* tape = nullptr;
  int id = -1;

  bool valid() const { return tape != nullptr && id >= 0; }
  const Mat& value() const;
  Index rows() const { return value().rows(); }
  Index cols() const { return value().cols(); }
};

enum class OpKind {
  leaf,
  matmul,
  add,
  scale_const,
  scale_rows,
  concat,
  slice,
  tanh_fn,
  gelu_fn,
  softmax_fn,
  log_softmax_fn,
  mse_fn,
  bce_logits_fn,
  mean_all,
  sum_all,
  dot_all,
  rowwise_dot_fn,
  l2_normalize_rows_fn,
};

class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Record a leaf holding a copy of `value`.
  Var input(Mat value, bool requires_grad = false);

  const Mat& value(Var v) const;
  bool requires_grad(Var v) const;
  size_t size() const { return nodes_.size(); }

  // Reverse sweep from a scalar (1x1) loss. Returns (leaf id, gradient) for
  // every requires_grad leaf reachable from the loss, in ascending id order,
  // then clears the tape. A second backward without new recording throws.
  std::vector<std::pair<int, Mat>> backward(Var loss);

  // Gradients for an explicit leaf list (same order as `wrt`); leaves that
  // the loss does not reach get zero gradients of the right shape.
  std::vector<Mat> backward(Var loss, std::span<const Var> wrt);

  void clear() { nodes_.clear(); }

 private:
  friend Var matmul(Var, Var, bool, bool);
  friend Var add(Var, Var);
  friend Var scale(Var, Scalar);
  friend Var scale(Var, Var);
  friend Var concat(std::span<const Var>, int);
  friend Var slice(Var, int, Index, Index);
  friend Var tanh(Var);
  friend Var gelu(Var);
  friend Var softmax(Var, int);
  friend Var log_softmax(Var, int);
  friend Var mse(Var, Var);
  friend Var bce_with_logits(Var, Var);
  friend Var mean(Var);
  friend Var sum(Var);
  friend Var dot(Var, Var);
  friend Var rowwise_dot(Var, Var);
  friend Var l2_normalize_rows(Var);

  struct Node {
    OpKind kind = OpKind::leaf;
    std::vector<int> parents;
    Mat value;
    Mat grad;  // allocated during backward only
    bool requires_grad = false;
    bool grad_set = false;
    // op payload
    Scalar scalar = 0.0;
    int axis = 1;
    Index begin = 0, extent = 0;
    bool trans_a = false, trans_b = false;
  };

  Var push(Node node);
  const Node& node(Var v) const;
  void propagate(int id);
  void accumulate(int id, const Mat& g);

  std::vector<Node> nodes_;
};

// ---- op set ----
// Shapes are (rows, cols); batches put samples in rows.

// General matrix product with optional transposes.
Var matmul(Var a, Var b, bool trans_a = false, bool trans_b = false);

// Elementwise add. `b` may also be 1xN (row broadcast over a's rows, the
// bias case) or 1x1 (scalar broadcast).
Var add(Var a, Var b);

// Multiply by a compile-time constant.
Var scale(Var a, Scalar c);

// Multiply rows of `a` by per-row factors `s` (Bx1), or everything by a 1x1.
Var scale(Var a, Var s);

// Concatenate along axis 0 (stack rows) or axis 1 (stack cols).
Var concat(std::span<const Var> parts, int axis);

// Contiguous range along `axis`: rows [begin, begin+extent) for axis 0,
// cols for axis 1.
Var slice(Var a, int axis, Index begin, Index extent);

Var tanh(Var a);

// Exact GELU: 0.5 x (1 + erf(x / sqrt(2))).
Var gelu(Var a);

// Softmax / log-softmax along axis 1 (within each row) or axis 0.
Var softmax(Var a, int axis = 1);
Var log_softmax(Var a, int axis = 1);

// Mean over all elements of the squared difference; scalar output.
Var mse(Var a, Var b);

// Mean over all elements of the numerically-stable binary cross-entropy on
// logits; scalar output.
Var bce_with_logits(Var logits, Var targets);

Var mean(Var a);
Var sum(Var a);

// Full contraction: sum of elementwise products of two same-shape tensors.
Var dot(Var a, Var b);

// Per-row contraction of two BxN tensors; output Bx1.
Var rowwise_dot(Var a, Var b);

// Rows rescaled to unit Euclidean norm (smoothed near zero).
Var l2_normalize_rows(Var a);

}  // namespace gwx
