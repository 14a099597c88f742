#include "mhg/linear_solve.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mhg/errors.hpp"
#include "mhg/kernels.hpp"
#include "mhg/residue.hpp"

namespace mhg {

namespace {

void require_rhs(const RingMatrix &a, std::span<const std::uint32_t> b) {
    if (b.size() != a.rows()) {
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries, system has " +
                                std::to_string(a.rows()) + " equations");
    }
}

ResidueVector reduce_all(std::span<const std::uint32_t> b, std::uint64_t d) {
    ResidueVector out(b.begin(), b.end());
    for (auto &v : out) {
        v = static_cast<std::uint32_t>(v % d);
    }
    return out;
}

}  // namespace

std::vector<ResidueVector> SolutionSet::enumerate(std::uint64_t cap) const {
    std::vector<ResidueVector> out;
    if (!consistent) {
        return out;
    }
    if (solution_count > cap) {
        throw SizeLimit("solution set has " + solution_count.str() + " members, cap is " + std::to_string(cap));
    }
    const Modulus mod(modulus);
    std::vector<std::uint64_t> k(nullspace.size(), 0);
    while (true) {
        ResidueVector x = *particular;
        for (std::size_t j = 0; j < nullspace.size(); j++) {
            const auto scale = static_cast<std::uint32_t>(k[j]);
            for (std::size_t i = 0; scale != 0 && i < x.size(); i++) {
                x[i] = mod.add(x[i], mod.mul(scale, nullspace[j].step[i]));
            }
        }
        out.push_back(std::move(x));
        bool carry = true;
        for (std::size_t j = nullspace.size(); j > 0 && carry; j--) {
            if (++k[j - 1] < nullspace[j - 1].order) {
                carry = false;
            } else {
                k[j - 1] = 0;
            }
        }
        if (carry) {
            return out;
        }
    }
}

GaussSolver::GaussSolver(const RingMatrix &a)
    : q_(a.modulus()), echelon_(a.rows(), a.cols(), a.modulus()), transform_(a.rows(), a.rows(), a.modulus()) {
    if (!is_prime(q_)) {
        throw NonPrimeModulus("Gaussian elimination needs a prime modulus, got " + std::to_string(q_));
    }
    const Modulus mod(q_);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t width = n + m;
    const auto q32 = static_cast<std::uint32_t>(q_);

    // Work on [A | I] so the row transform is recorded alongside the echelon form.
    std::vector<std::uint32_t> work(m * width, 0);
    for (std::size_t r = 0; r < m; r++) {
        std::copy(a.row(r).begin(), a.row(r).end(), work.begin() + r * width);
        work[r * width + n + r] = 1;
    }
    auto row = [&](std::size_t r) { return std::span<std::uint32_t>(work.data() + r * width, width); };

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; c++) {
        std::size_t p = r;
        while (p < m && work[p * width + c] == 0) {
            p++;
        }
        if (p == m) {
            continue;
        }
        if (p != r) {
            std::swap_ranges(row(p).begin(), row(p).end(), row(r).begin());
        }
        auto pivot_row = row(r);
        const std::uint32_t inv = *mod.inverse(pivot_row[c]);
        kernels::scale_mod(pivot_row, pivot_row, inv, q32);
        for (std::size_t i = 0; i < m; i++) {
            const std::uint32_t factor = work[i * width + c];
            if (i == r || factor == 0) {
                continue;
            }
            kernels::axpy_mod(row(i), pivot_row, mod.neg(factor), q32);
        }
        pivot_columns_.push_back(c);
        r++;
    }

    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t c = 0; c < n; c++) {
            echelon_.set(i, c, work[i * width + c]);
        }
        for (std::size_t c = 0; c < m; c++) {
            transform_.set(i, c, work[i * width + n + c]);
        }
    }
}

ResidueVector GaussSolver::transformed_rhs(std::span<const std::uint32_t> b) const {
    require_rhs(echelon_, b);
    return transform_.multiply(reduce_all(b, q_));
}

std::size_t GaussSolver::augmented_rank(std::span<const std::uint32_t> b) const {
    ResidueVector c = transformed_rhs(b);
    bool extra = std::any_of(c.begin() + static_cast<std::ptrdiff_t>(rank()), c.end(),
                             [](std::uint32_t v) { return v != 0; });
    return rank() + (extra ? 1 : 0);
}

SolutionSet GaussSolver::solve(std::span<const std::uint32_t> b) const {
    const Modulus mod(q_);
    SolutionSet out;
    out.modulus = q_;
    out.unknowns = echelon_.cols();
    ResidueVector c = transformed_rhs(b);
    for (std::size_t i = rank(); i < c.size(); i++) {
        if (c[i] != 0) {
            return out;
        }
    }
    out.consistent = true;
    ResidueVector x(echelon_.cols(), 0);
    for (std::size_t i = 0; i < rank(); i++) {
        x[pivot_columns_[i]] = c[i];
    }
    out.particular = std::move(x);

    std::vector<bool> is_pivot(echelon_.cols(), false);
    for (auto p : pivot_columns_) {
        is_pivot[p] = true;
    }
    for (std::size_t f = 0; f < echelon_.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        ResidueVector step(echelon_.cols(), 0);
        step[f] = 1;
        for (std::size_t i = 0; i < rank(); i++) {
            step[pivot_columns_[i]] = mod.neg(echelon_.at(i, f));
        }
        out.nullspace.push_back({std::move(step), q_});
    }
    out.solution_count = boost::multiprecision::pow(BigCount(q_), static_cast<unsigned>(out.nullspace.size()));
    return out;
}

std::vector<ResidueVector> GaussSolver::left_nullspace() const {
    const std::size_t m = transform_.rows();
    const std::size_t k = m - rank();
    if (k == 0) {
        return {};
    }
    RingMatrix basis(k, m, q_);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t c = 0; c < m; c++) {
            basis.set(i, c, transform_.at(rank() + i, c));
        }
    }
    // The rows are independent; their echelon form is the canonical basis of the same space.
    GaussSolver canon(basis);
    std::vector<ResidueVector> out;
    for (std::size_t i = 0; i < canon.rank(); i++) {
        auto r = canon.echelon().row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

SmithSolver::SmithSolver(const RingMatrix &a)
    : d_(a.modulus()),
      rows_(a.rows()),
      cols_(a.cols()),
      left_(RingMatrix::identity(a.rows(), a.modulus())),
      right_(RingMatrix::identity(a.cols(), a.modulus())) {
    const auto d = static_cast<std::int64_t>(d_);
    const std::size_t m = rows_;
    const std::size_t n = cols_;
    auto red = [d](__int128 v) {
        auto r = static_cast<std::int64_t>(v % d);
        return r < 0 ? r + d : r;
    };

    std::vector<std::int64_t> s(a.entries().begin(), a.entries().end());
    std::vector<std::int64_t> u(m * m, 0), v(n * n, 0);
    for (std::size_t i = 0; i < m; i++) {
        u[i * m + i] = 1;
    }
    for (std::size_t i = 0; i < n; i++) {
        v[i * n + i] = 1;
    }
    auto S = [&](std::size_t r, std::size_t c) -> std::int64_t & { return s[r * n + c]; };

    // Rows (r1, r2) <- (x*r1 + y*r2, z*r1 + w*r2) on S and U; determinant x*w - y*z = +-1.
    auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t x, std::int64_t y, std::int64_t z,
                      std::int64_t w) {
        for (std::size_t c = 0; c < n; c++) {
            std::int64_t a1 = S(r1, c), a2 = S(r2, c);
            S(r1, c) = red(static_cast<__int128>(x) * a1 + static_cast<__int128>(y) * a2);
            S(r2, c) = red(static_cast<__int128>(z) * a1 + static_cast<__int128>(w) * a2);
        }
        for (std::size_t c = 0; c < m; c++) {
            std::int64_t a1 = u[r1 * m + c], a2 = u[r2 * m + c];
            u[r1 * m + c] = red(static_cast<__int128>(x) * a1 + static_cast<__int128>(y) * a2);
            u[r2 * m + c] = red(static_cast<__int128>(z) * a1 + static_cast<__int128>(w) * a2);
        }
    };
    auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t x, std::int64_t y, std::int64_t z,
                      std::int64_t w) {
        for (std::size_t r = 0; r < m; r++) {
            std::int64_t a1 = S(r, c1), a2 = S(r, c2);
            S(r, c1) = red(static_cast<__int128>(x) * a1 + static_cast<__int128>(y) * a2);
            S(r, c2) = red(static_cast<__int128>(z) * a1 + static_cast<__int128>(w) * a2);
        }
        for (std::size_t r = 0; r < n; r++) {
            std::int64_t a1 = v[r * n + c1], a2 = v[r * n + c2];
            v[r * n + c1] = red(static_cast<__int128>(x) * a1 + static_cast<__int128>(y) * a2);
            v[r * n + c2] = red(static_cast<__int128>(z) * a1 + static_cast<__int128>(w) * a2);
        }
    };

    const std::size_t k = std::min(m, n);
    diagonal_.assign(k, 0);
    for (std::size_t t = 0; t < k; t++) {
        std::size_t pr = m, pc = n;
        for (std::size_t c = t; c < n && pr == m; c++) {
            for (std::size_t r = t; r < m; r++) {
                if (S(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == m) {
            break;
        }
        if (pr != t) {
            row_op(t, pr, 0, 1, 1, 0);
        }
        if (pc != t) {
            col_op(t, pc, 0, 1, 1, 0);
        }

        // The pivot strictly decreases whenever a gcd step changes it, so this terminates.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t r = t + 1; r < m; r++) {
                if (S(r, t) == 0) {
                    continue;
                }
                std::int64_t p = S(t, t), b = S(r, t);
                auto [g, x, y] = extended_gcd(p, b);
                row_op(t, r, red(x), red(y), red(-(b / g)), red(p / g));
            }
            for (std::size_t c = t + 1; c < n; c++) {
                if (S(t, c) == 0) {
                    continue;
                }
                std::int64_t p = S(t, t), b = S(t, c);
                auto [g, x, y] = extended_gcd(p, b);
                col_op(t, c, red(x), red(y), red(-(b / g)), red(p / g));
            }
            for (std::size_t r = t + 1; r < m; r++) {
                if (S(r, t) != 0) {
                    dirty = true;
                    break;
                }
            }
        }
        diagonal_[t] = static_cast<std::uint64_t>(S(t, t));
    }

    for (std::size_t r = 0; r < m; r++) {
        for (std::size_t c = 0; c < m; c++) {
            left_.set(r, c, u[r * m + c]);
        }
    }
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            right_.set(r, c, v[r * n + c]);
        }
    }
}

SolutionSet SmithSolver::solve(std::span<const std::uint32_t> b) const {
    if (b.size() != rows_) {
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) + " entries, system has " +
                                std::to_string(rows_) + " equations");
    }
    const Modulus mod(d_);
    SolutionSet out;
    out.modulus = d_;
    out.unknowns = cols_;
    ResidueVector c = left_.multiply(reduce_all(b, d_));
    const std::size_t k = diagonal_.size();
    for (std::size_t i = k; i < rows_; i++) {
        if (c[i] != 0) {
            return out;
        }
    }

    ResidueVector y(cols_, 0);
    std::vector<std::pair<std::size_t, std::uint64_t>> directions;  // (column of V, multiplier)
    for (std::size_t i = 0; i < k; i++) {
        const std::uint64_t g = gcd(diagonal_[i], d_);  // gcd(0, d) = d
        if (c[i] % g != 0) {
            return out;
        }
        const std::uint64_t sub = d_ / g;
        if (sub > 1) {
            const Modulus m2(sub);
            auto inv = m2.inverse(static_cast<std::uint32_t>((diagonal_[i] / g) % sub));
            y[i] = m2.mul(static_cast<std::uint32_t>((c[i] / g) % sub), *inv);
        }
        if (g > 1) {
            directions.emplace_back(i, sub);
        }
    }
    for (std::size_t j = k; j < cols_; j++) {
        directions.emplace_back(j, 1);
    }

    out.consistent = true;
    out.particular = right_.multiply(y);
    out.solution_count = 1;
    for (auto [col, mult] : directions) {
        ResidueVector step(cols_, 0);
        for (std::size_t r = 0; r < cols_; r++) {
            step[r] = mod.mul(right_.at(r, col), static_cast<std::uint32_t>(mult % d_));
        }
        const std::uint64_t order = d_ / mult;
        out.nullspace.push_back({std::move(step), order});
        out.solution_count *= order;
    }
    return out;
}

SolutionSet solve_prime(const RingMatrix &a, std::span<const std::uint32_t> b) {
    return GaussSolver(a).solve(b);
}

SolutionSet solve_residue(const RingMatrix &a, std::span<const std::uint32_t> b) {
    require_rhs(a, b);
    return SmithSolver(a).solve(b);
}

RankReport rank_and_consistency(const RingMatrix &a, std::span<const std::uint32_t> b) {
    require_rhs(a, b);
    RankReport report{{}, true};
    const Modulus mod(a.modulus());
    for (const auto &pp : mod.factorization()) {
        const std::uint64_t q = pp.value();
        GaussSolver field(a.reduced(pp.prime));
        ResidueVector bp = reduce_all(b, pp.prime);
        FactorRank fr{pp.prime, pp.exponent, field.rank(), field.augmented_rank(bp), false};
        if (pp.exponent == 1) {
            fr.consistent = fr.rank == fr.augmented_rank;
        } else {
            ResidueVector bq = reduce_all(b, q);
            fr.consistent = SmithSolver(a.reduced(q)).solve(bq).consistent;
        }
        report.consistent = report.consistent && fr.consistent;
        report.factors.push_back(fr);
    }
    return report;
}

std::vector<ResidueVector> left_nullspace_prime(const RingMatrix &a) {
    return GaussSolver(a).left_nullspace();
}

}  // namespace mhg
