#pragma once

// Explicit finite matrix groups over a small finite field.
//
// A group is stored as the sorted array of the canonical encodings of its
// elements; element indices refer to positions in that array.  Products are
// computed on matrices and looked up by binary search.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lietab/field.hpp"

namespace lietab {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxDim = 4;

// n x n matrix of field codes, row-major; entries beyond n x n stay zero.
struct Matrix {
  int n = 0;
  std::array<Code, kMaxDim * kMaxDim> a{};

  Code& at(int r, int c) { return a[r * kMaxDim + c]; }
  Code at(int r, int c) const { return a[r * kMaxDim + c]; }
  bool operator==(const Matrix& o) const = default;
};

class MatrixSpace {
 public:
  MatrixSpace(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  const PrimePowerField& F() const { return *field_; }
  int dim() const { return n_; }

  Matrix identity() const;
  Matrix scalar(Code c) const;
  Matrix diagonal(std::span<const Code> d) const;
  Matrix from_rows(const std::vector<std::vector<Code>>& rows) const;
  std::vector<std::vector<Code>> to_rows(const Matrix& m) const;

  Matrix mul(const Matrix& x, const Matrix& y) const;
  Code det(const Matrix& x) const;
  Matrix inverse(const Matrix& x) const;
  Matrix transpose(const Matrix& x) const;
  // entrywise x -> x^(p^m)
  Matrix frobenius(const Matrix& x, long long m) const;

  // Row-major base-q digits, first entry most significant.
  std::uint64_t encode(const Matrix& x) const;
  Matrix decode(std::uint64_t code) const;
  std::string to_string(const Matrix& x) const;

 private:
  FieldPtr field_;
  int n_;
};

using SpacePtr = std::shared_ptr<const MatrixSpace>;

class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  // Closure of the generators under multiplication.
  static FiniteGroup generate(SpacePtr space, const std::vector<Matrix>& gens,
                              std::size_t cap = kDefaultCap);

  const SpacePtr& space() const { return space_; }
  std::size_t order() const { return codes_.size(); }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  std::optional<std::size_t> find(const Matrix& m) const;
  std::optional<std::size_t> find_code(std::uint64_t c) const;
  std::size_t index_of(const Matrix& m) const;

  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const;  // g x g^-1
  std::size_t power(std::size_t i, long long m) const;
  std::size_t element_order(std::size_t i) const;

  const std::vector<Matrix>& generator_matrices() const { return generators_; }
  const std::vector<std::size_t>& generators() const { return generator_indices_; }

 private:
  FiniteGroup() = default;

  SpacePtr space_;
  std::vector<Matrix> elements_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<Matrix> generators_;
  std::vector<std::size_t> generator_indices_;
};

struct ConjugacyData {
  std::vector<std::size_t> class_of;           // element index -> class
  std::vector<std::size_t> reps;               // class -> representative element
  std::vector<std::uint64_t> sizes;            // class -> |C|
  std::vector<std::uint64_t> centralizer_orders;
  std::vector<std::uint64_t> rep_orders;       // class -> element order
  std::uint64_t exponent = 1;
  // powers[c][m] = class of rep(c)^m for 0 <= m < rep_orders[c]
  std::vector<std::vector<std::size_t>> powers;

  std::size_t num_classes() const { return reps.size(); }
};

ConjugacyData conjugacy(const FiniteGroup& g);

// A group together with its class structure.
struct ClassedGroup {
  FiniteGroup group;
  ConjugacyData classes;

  std::size_t order() const { return group.order(); }
  std::size_t num_classes() const { return classes.num_classes(); }
};

using GroupPtr = std::shared_ptr<const ClassedGroup>;

GroupPtr classify(FiniteGroup g);

// class of g -> class of g^m
std::vector<std::size_t> power_class_map(const ClassedGroup& g, long long m);

// Elements of the centre, as indices.
std::vector<std::size_t> center(const ClassedGroup& g);

// H <= G with the element and class maps into G.
struct Subgroup {
  GroupPtr parent;
  GroupPtr sub;
  std::vector<std::size_t> embedding;  // H element -> G element
  std::vector<std::size_t> fusion;     // H class -> G class

  std::size_t index() const { return parent->order() / sub->order(); }
};

Subgroup subgroup(const GroupPtr& parent, const std::vector<std::size_t>& element_indices);
Subgroup subgroup(const GroupPtr& parent, const std::function<bool(const Matrix&)>& pred);
// K <= H <= G given as subgroups of H, re-expressed as a subgroup of G.
Subgroup compose(const Subgroup& inner, const Subgroup& outer);

std::vector<std::size_t> class_fusion(const Subgroup& h);

// N normal in P, both subgroups of the same group: checked on generators.
bool is_normal(const Subgroup& n_in_p);

// A small generating set of the subset, chosen greedily in index order.
std::vector<std::size_t> greedy_generators(const FiniteGroup& g, const std::vector<std::size_t>& subset);

}  // namespace lietab
