#include "tor3/matrix.hpp"

#include <cassert>

namespace tor3 {

FpMatrix::FpMatrix(const PrimeField& field, int rows, int cols)
    : rows_(rows), cols_(cols), fld_(field), a_(static_cast<std::size_t>(rows) * cols, 0) {
    assert(rows >= 0 && cols >= 0);
}

FpVec FpMatrix::row(int i) const {
    FpVec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(get(i, j));
    return r;
}

FpVec FpMatrix::col(int j) const {
    FpVec c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(get(i, j));
    return c;
}

FpMatrix FpMatrix::from_columns(const PrimeField& field, int length, const std::vector<FpVec>& columns) {
    FpMatrix m(field, length, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols(); ++j) {
        assert(static_cast<int>(columns[j].size()) == length);
        for (int i = 0; i < length; ++i) m.at(i, j) = columns[j][i].value();
    }
    return m;
}

FpMatrix FpMatrix::from_rows(const PrimeField& field, int length, const std::vector<FpVec>& rows) {
    FpMatrix m(field, static_cast<int>(rows.size()), length);
    for (int i = 0; i < m.rows(); ++i) {
        assert(static_cast<int>(rows[i].size()) == length);
        for (int j = 0; j < length; ++j) m.at(i, j) = rows[i][j].value();
    }
    return m;
}

FpVec FpMatrix::apply(const FpVec& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    const long long p = fld_.modulus();
    FpVec out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols_; ++j) {
            acc = (acc + at(i, j) * v[j].value()) % p;
        }
        out.push_back(Fp(acc, p));
    }
    return out;
}

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix t(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
    assert(a.cols() == b.rows());
    const long long p = a.field().modulus();
    FpMatrix c(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            long long aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % p;
        }
    return c;
}

FpMatrix vstack(const std::vector<const FpMatrix*>& parts) {
    assert(!parts.empty());
    int cols = parts[0]->cols();
    int rows = 0;
    for (const FpMatrix* m : parts) {
        assert(m->cols() == cols);
        rows += m->rows();
    }
    FpMatrix out(parts[0]->field(), rows, cols);
    int r = 0;
    for (const FpMatrix* m : parts) {
        for (int i = 0; i < m->rows(); ++i, ++r)
            for (int j = 0; j < cols; ++j) out.at(r, j) = m->at(i, j);
    }
    return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Optionally applies the same
// row operations to a second matrix (the transform accumulator).
std::vector<int> gauss_jordan(FpMatrix& m, FpMatrix* companion) {
    const long long p = m.field().modulus();
    std::vector<int> pivots;
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
            if (companion)
                for (int j = 0; j < companion->cols(); ++j)
                    std::swap(companion->at(sel, j), companion->at(pivot_row, j));
        }
        long long inv = pow_mod(m.at(pivot_row, col), p - 2, p);
        for (int j = 0; j < m.cols(); ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv % p;
        if (companion)
            for (int j = 0; j < companion->cols(); ++j)
                companion->at(pivot_row, j) = companion->at(pivot_row, j) * inv % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            long long f = m.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) - f * m.at(pivot_row, j) % p + p) % p;
            if (companion)
                for (int j = 0; j < companion->cols(); ++j)
                    companion->at(i, j) =
                        (companion->at(i, j) - f * companion->at(pivot_row, j) % p + p) % p;
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
    FpMatrix r = m;
    std::vector<int> pivots = gauss_jordan(r, nullptr);
    int rank = static_cast<int>(pivots.size());
    return RrefResult{std::move(r), std::move(pivots), rank};
}

int rank_of(const FpMatrix& m) { return rref(m).rank; }

std::vector<FpVec> kernel_basis(const FpMatrix& m) {
    RrefResult r = rref(m);
    const long long p = m.field().modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivots) is_pivot[c] = true;

    std::vector<FpVec> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        FpVec v(m.cols(), Fp(0, p));
        v[free_col] = Fp(1, p);
        for (int i = 0; i < r.rank; ++i) {
            long long entry = r.reduced.at(i, free_col);
            if (entry != 0) v[r.pivots[i]] = Fp(p - entry, p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SpanSolver::SpanSolver(const PrimeField& field, int length, const std::vector<FpVec>& generators)
    : fld_(field),
      length_(length),
      gen_count_(static_cast<int>(generators.size())),
      gens_(FpMatrix::from_columns(field, length, generators)),
      echelon_(gens_),
      transform_(field, length, length) {
    for (int i = 0; i < length; ++i) transform_.at(i, i) = 1 % field.modulus();
    pivots_ = gauss_jordan(echelon_, &transform_);
}

std::optional<FpVec> SpanSolver::solve(const FpVec& target) const {
    assert(static_cast<int>(target.size()) == length_);
    const long long p = fld_.modulus();
    FpVec u = transform_.apply(target);
    int rank = static_cast<int>(pivots_.size());
    for (int i = rank; i < length_; ++i)
        if (!u[i].is_zero()) return std::nullopt;

    FpVec x(gen_count_, Fp(0, p));
    for (int i = 0; i < rank; ++i) x[pivots_[i]] = u[i];

    // Substitution check; a mismatch would mean the elimination state is corrupt.
    FpVec back = gens_.apply(x);
    for (int i = 0; i < length_; ++i)
        if (back[i] != target[i]) throw Error("span solve failed substitution check");
    return x;
}

std::vector<std::optional<FpVec>> solve_in_span(const PrimeField& field, int length,
                                                const std::vector<FpVec>& targets,
                                                const std::vector<FpVec>& generators) {
    SpanSolver solver(field, length, generators);
    std::vector<std::optional<FpVec>> out;
    out.reserve(targets.size());
    for (const FpVec& t : targets) out.push_back(solver.solve(t));
    return out;
}

}  // namespace tor3
