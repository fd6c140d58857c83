#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "marlgpt/tensor.hpp"

namespace marlgpt {

enum class Op : uint8_t {
  kLeaf,
  kConstant,
  kAdd,          // same shape | rhs last-dim vector | rhs scalar
  kMul,          // same shape | rhs scalar
  kScale,        // multiply by compile-time constant
  kMatmul,       // 2-D, batched 3-D, or 3-D x shared 2-D; transpose flags
  kRows,         // gather rows of a 2-D tensor by index
  kRowScale,     // scale each length-C row of x by a per-row factor
  kReshape,
  kSliceCols,    // slice of the last dimension
  kConcatCols,   // concatenation along the last dimension
  kLayerNorm,    // over the last dimension, learned gain/bias
  kGelu,
  kSoftmax,      // last dimension, -inf aware
  kLog,
  kExp,
  kCrossEntropy, // per-row CE between logits and a fixed-sum-1 target
  kMaskedFill,   // write `fill` where keep-mask is 0
  kSum,
  kMean,
  kMinimum,
};

const char* op_name(Op op);

struct Node {
  Op op = Op::kLeaf;
  std::vector<int> inputs;
  Tensor value;
  Tensor grad;  // allocated on demand during backward
  bool requires_grad = false;

  // op payloads
  std::vector<int64_t> indices;  // kRows
  std::vector<uint8_t> mask;     // kMaskedFill (1 = keep)
  double scalar0 = 0.0;          // kScale factor / kMaskedFill fill value
  bool trans_a = false, trans_b = false;  // kMatmul
  int c0 = 0, c1 = 0;                     // kSliceCols
};

// Handle into a Graph; cheap to copy.
struct Val {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Define-by-run tape. One Graph is built per training step and discarded;
// insertion order is the topological order.
class Graph {
 public:
  Val leaf(const Tensor& t);             // input, no gradient
  Val param(const Tensor& t);            // leaf that receives a gradient
  Val constant(Tensor t);
  Val scalar(double v) { return constant(Tensor::scalar(v)); }

  Val add(Val a, Val b);
  Val mul(Val a, Val b);
  Val scale(Val a, double c);
  Val matmul(Val a, Val b, bool trans_a = false, bool trans_b = false);
  Val rows(Val table, std::vector<int64_t> idx);
  Val row_scale(Val x, Val s);
  Val reshape(Val a, std::vector<int> shape);
  Val slice_cols(Val a, int c0, int c1);
  Val concat_cols(const std::vector<Val>& xs);
  Val layer_norm(Val x, Val gain, Val bias);
  Val gelu(Val x);
  Val softmax(Val x);
  Val log(Val x);
  Val exp(Val x);
  Val cross_entropy(Val logits, Val target);
  Val masked_fill(Val x, std::vector<uint8_t> keep, double fill);
  Val sum(Val x);
  Val mean(Val x);
  Val minimum(Val a, Val b);

  const Tensor& value(Val v) const { return nodes_[check(v)].value; }
  const Node& node(Val v) const { return nodes_[check(v)]; }
  std::size_t size() const { return nodes_.size(); }

  // Reverse-mode sweep from a scalar loss. Returns the gradient of the loss
  // w.r.t. every param() leaf, keyed by node id. Non-parameter leaves get
  // nothing. Throws NumericError naming the node if a NaN gradient appears.
  std::unordered_map<int, Tensor> backward(Val loss);

  bool check_numerics = true;

 private:
  std::vector<Node> nodes_;

  int check(Val v) const;
  Val push(Node n);
  void backward_node(int id);
  Tensor& grad_buf(int id);
};

// Numerical layer-norm epsilon shared by forward and backward.
inline constexpr double kLayerNormEps = 1e-5;

}  // namespace marlgpt
