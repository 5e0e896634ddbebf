#pragma once

#include <vector>

#include "groupcx/bigint.hpp"
#include "groupcx/simplicial_complex.hpp"

namespace groupcx {

/// Dense matrix of exact integers. No floating point anywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(size_t(rows) * cols, BigInt(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// The simplices of c per dimension, canonically ordered (lex within each
/// cardinality).
std::vector<std::vector<Simplex>> simplices_by_dimension(const SimplicialComplex& c);

/// Boundary operators: result[k-1] is the matrix of d_k, rows indexed by the
/// (k-1)-simplices and columns by the k-simplices in canonical order, with
/// entry (-1)^i for deleting the i-th vertex. d_k . d_{k+1} = 0.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c);

struct SmithResult {
  std::vector<BigInt> diagonal;  // positive, each dividing the next
  int rank = 0;
};

/// Smith normal form by unimodular row/column operations, choosing a
/// minimal-absolute-value pivot to control entry growth. The input is copied.
SmithResult smith_normal_form(const IntMatrix& m);

struct HomologyGroup {
  int dim = 0;
  long long betti = 0;
  std::vector<BigInt> torsion;  // entries > 1, each dividing the next
};

struct HomologySummary {
  bool reduced = true;
  std::vector<HomologyGroup> groups;  // dims -1 (empty complex only) .. dim
  BigInt euler;                       // sum of (-1)^k f_k over k >= 0
};

/// Integral simplicial homology. beta_k = f_k - rank d_k - rank d_{k+1};
/// torsion in degree k comes from the SNF diagonal of d_{k+1}. When reduced,
/// d_0 is the augmentation map onto the empty simplex; the reduced homology
/// of the empty complex is free of rank 1 in degree -1.
HomologySummary homology(const SimplicialComplex& c, bool reduced);

}  // namespace groupcx
