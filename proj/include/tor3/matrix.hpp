#ifndef TOR3_MATRIX_HPP
#define TOR3_MATRIX_HPP

#include <optional>
#include <vector>

#include "tor3/fp.hpp"

namespace tor3 {

using FpVec = std::vector<Fp>;

/// Dense matrix over F_p, row-major. Entries are stored as raw residues with
/// the field context held once per matrix.
class FpMatrix {
  public:
    FpMatrix(const PrimeField& field, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return fld_; }

    long long& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    void set(int i, int j, const Fp& x) { at(i, j) = x.value(); }
    Fp get(int i, int j) const { return Fp(at(i, j), fld_.modulus()); }

    FpVec row(int i) const;
    FpVec col(int j) const;

    /// Columns are the given vectors; all must have the same length.
    static FpMatrix from_columns(const PrimeField& field, int length, const std::vector<FpVec>& columns);
    static FpMatrix from_rows(const PrimeField& field, int length, const std::vector<FpVec>& rows);

    FpVec apply(const FpVec& v) const;  // matrix * column vector

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    int rows_, cols_;
    PrimeField fld_;
    std::vector<long long> a_;
};

FpMatrix transpose(const FpMatrix& m);
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);

/// Stack matrices vertically; all must agree on the column count.
FpMatrix vstack(const std::vector<const FpMatrix*>& parts);

struct RrefResult {
    FpMatrix reduced;
    std::vector<int> pivots;  // strictly increasing column indices
    int rank;
};

/// Reduced row echelon form with the deterministic pivot rule: in each
/// column, the first row (top to bottom) with a nonzero entry.
RrefResult rref(const FpMatrix& m);

int rank_of(const FpMatrix& m);

/// Basis of the right kernel {v : Mv = 0}, one vector per free column, in
/// ascending free-column order.
std::vector<FpVec> kernel_basis(const FpMatrix& m);

/// Exact solver for membership in the span of a fixed generator list.
/// Generators are columns; solve() returns coordinates (free generators get
/// coefficient 0) or nullopt when the target is outside the span. Solutions
/// are verified by substitution before being returned.
class SpanSolver {
  public:
    SpanSolver(const PrimeField& field, int length, const std::vector<FpVec>& generators);

    std::optional<FpVec> solve(const FpVec& target) const;
    int generator_count() const { return gen_count_; }

  private:
    PrimeField fld_;
    int length_;
    int gen_count_;
    FpMatrix gens_;       // length x gen_count, original generators
    FpMatrix echelon_;    // rref of gens_
    FpMatrix transform_;  // transform_ * gens_ == echelon_
    std::vector<int> pivots_;
};

/// Per-target convenience wrapper over SpanSolver.
std::vector<std::optional<FpVec>> solve_in_span(const PrimeField& field, int length,
                                                const std::vector<FpVec>& targets,
                                                const std::vector<FpVec>& generators);

}  // namespace tor3

#endif
