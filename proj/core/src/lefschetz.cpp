#include "twistlab/lefschetz.hpp"

#include <string>
#include <utility>

#include "twistlab/errors.hpp"

namespace twistlab {

RationalMatrix::RationalMatrix(std::size_t n, const std::vector<long>& row_major) : n_(n), a_(n * n) {
    if (row_major.size() != n * n) throw DimensionError("rational matrix needs n*n entries");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = row_major[i];
}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

int signature_of_form(RationalMatrix q) {
    if (!q.is_symmetric()) throw ContractError("signature_of_form: matrix is not symmetric");
    const std::size_t n = q.size();
    auto swap_index = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(q(a, j), q(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(q(i, a), q(i, b));
    };
    int sig = 0;
    mpq_class f;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(q(p, p)) == 0) ++p;
        if (p == n) {
            // Zero diagonal: e_i += e_j turns a hyperbolic pair into a nonzero pivot.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (sgn(q(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t j = 0; j < n; ++j) q(pi, j) += q(pj, j);
            for (std::size_t i = 0; i < n; ++i) q(i, pi) += q(i, pj);
            p = pi;
        }
        swap_index(k, p);
        const mpq_class d = q(k, k);
        sig += sgn(d) > 0 ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(q(i, k)) == 0) continue;
            f = q(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (sgn(q(k, j)) != 0) q(i, j) -= f * q(k, j);
            }
            q(i, k) = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) q(k, j) = 0;
    }
    return sig;
}

namespace {

// Row-major rows x cols rational matrix reduced in place to RREF; returns pivot columns.
std::vector<std::size_t> rref(std::vector<mpq_class>& m, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    mpq_class f;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p * cols + c]) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
        const mpq_class piv = m[r * cols + c];
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m[r * cols + j]) != 0) m[r * cols + j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i * cols + c]) == 0) continue;
            f = m[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[r * cols + j]) != 0) m[i * cols + j] -= f * m[r * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the kernel of an RREF matrix with the given pivots.
std::vector<std::vector<mpq_class>> kernel_basis(const std::vector<mpq_class>& m, std::size_t cols,
                                                 const std::vector<std::size_t>& pivots) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r * cols + f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// <u, v> for rational coordinate vectors.
mpq_class pair_q(const std::vector<mpq_class>& u, std::size_t uoff, const std::vector<Int>& v, std::size_t n) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < n; i += 2) {
        if (v[i + 1] != 0) s += u[uoff + i] * v[i + 1];
        if (v[i] != 0) s -= u[uoff + i + 1] * v[i];
    }
    return s;
}

int tau_unchecked(const SpMatrix& a, const SpMatrix& b) {
    const std::size_t n = static_cast<std::size_t>(a.dimension());
    const SpMatrix ainv = a.symplectic_inverse();

    // Image of I - B: pivot columns f_j and coordinates E (w = sum_j (E y)_j f_j).
    std::vector<mpq_class> imb(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            imb[i * n + j] = (i == j ? 1 : 0) - b(static_cast<int>(i), static_cast<int>(j));
    const auto imb_pivots = rref(imb, n, n);
    const std::size_t rk = imb_pivots.size();
    if (rk == 0) return 0;
    std::vector<std::vector<Int>> fcols(rk, std::vector<Int>(n));
    for (std::size_t j = 0; j < rk; ++j)
        for (std::size_t i = 0; i < n; ++i)
            fcols[j][i] = (i == imb_pivots[j] ? 1 : 0) - b(static_cast<int>(i), static_cast<int>(imb_pivots[j]));

    // V = ker [A^-1 - I | B - I].
    const std::size_t cols = 2 * n;
    std::vector<mpq_class> k(n * cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int ii = static_cast<int>(i), jj = static_cast<int>(j);
            k[i * cols + j] = ainv(ii, jj) - (i == j ? 1 : 0);
            k[i * cols + n + j] = b(ii, jj) - (i == j ? 1 : 0);
        }
    const auto kp = rref(k, n, cols);
    const auto basis = kernel_basis(k, cols, kp);

    // The symmetrized form is the pullback of the hyperbolic form a.b' + a'.b on Q^{2r}
    // along v -> (a, b), a_j = <x + y, f_j>, b = E y.
    const std::size_t m = 2 * rk;
    std::vector<mpq_class> z(basis.size() * m);
    std::vector<mpq_class> uy(n);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const auto& v = basis[t];
        for (std::size_t i = 0; i < n; ++i) uy[i] = v[i] + v[n + i];
        for (std::size_t j = 0; j < rk; ++j) z[t * m + j] = pair_q(uy, 0, fcols[j], n);
        for (std::size_t j = 0; j < rk; ++j) {
            mpq_class s = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (sgn(imb[j * n + c]) != 0 && sgn(v[n + c]) != 0) s += imb[j * n + c] * v[n + c];
            z[t * m + rk + j] = s;
        }
    }
    // Basis of the span of the z vectors.
    const auto zp = rref(z, basis.size(), m);
    const std::size_t d = zp.size();
    RationalMatrix g(d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            mpq_class s = 0;
            for (std::size_t j = 0; j < rk; ++j)
                s += z[p * m + j] * z[q * m + rk + j] + z[q * m + j] * z[p * m + rk + j];
            g(p, q) = s;
        }
    return signature_of_form(std::move(g));
}

}  // namespace

int meyer_tau(const SpMatrix& a, const SpMatrix& b) {
    if (a.space() != b.space()) throw DimensionError("meyer_tau: matrices act on different spaces");
    if (!is_symplectic(a)) throw ContractError("meyer_tau: first argument is not symplectic");
    if (!is_symplectic(b)) throw ContractError("meyer_tau: second argument is not symplectic");
    return tau_unchecked(a, b);
}

Factorization Factorization::from_word(const TwistWord& w, const CycleConfiguration& cfg) {
    Factorization f{cfg.space(), {}};
    for (const auto& s : w) {
        if (s.exponent != 1)
            throw ContractError("factorization needs positive twists, got " + format_symbol(s));
        f.cycles.push_back(cfg.class_of(s));
    }
    return f;
}

SpMatrix Factorization::product() const {
    SpMatrix m(space);
    for (const auto& c : cycles) multiply_by_transvection(m, c, 1);
    return m;
}

SignatureResult accumulate_signature(const Factorization& f) {
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        if (f.cycles[i].space() != f.space) throw DimensionError("vanishing cycle in a different space");
        if (f.cycles[i].is_zero()) throw SeparatingCycleUnsupported(i);
    }
    SignatureResult res;
    SpMatrix prefix(f.space);
    for (const auto& c : f.cycles) {
        const int s = tau_unchecked(prefix, transvection(c));
        res.contributions.push_back(s);
        res.sigma += s;
        multiply_by_transvection(prefix, c, 1);
    }
    return res;
}

SignatureResult lf_signature(const Factorization& f) {
    for (std::size_t i = 0; i < f.cycles.size(); ++i)
        if (f.cycles[i].is_zero()) throw SeparatingCycleUnsupported(i);
    if (!f.product().is_identity())
        throw NotAFibrationOverSphere("monodromy product of " + std::to_string(f.size()) +
                                      " twists is not the identity");
    return accumulate_signature(f);
}

int euler_characteristic(int g, int n) {
    if (g < 1) throw ParameterError("genus must be positive");
    if (n < 0) throw ParameterError("number of twists must be non-negative");
    return 2 * (2 - 2 * g) + n;
}

LFInvariants invariants_of(const Factorization& f) {
    LFInvariants inv;
    const auto sig = lf_signature(f);
    inv.g = f.space.genus();
    inv.n = static_cast<int>(f.size());
    inv.chi = euler_characteristic(inv.g, inv.n);
    inv.sigma = sig.sigma;
    inv.c1sq = 3 * inv.sigma + 2 * inv.chi;
    inv.chi_h = mpq_class(inv.sigma + inv.chi, 4);
    inv.chi_h.canonicalize();
    inv.contributions = sig.contributions;
    return inv;
}

ThetaInvariants invariants_bundle(const ThetaParams& p) {
    const auto theta = theta_word(p);
    ThetaInvariants out;
    out.params = p;
    out.h = p.h();
    out.k = p.k;
    out.inv = invariants_of(Factorization::from_word(theta.word * theta.word, theta.config));
    out.w = out.inv.n;
    if (!out.inv.chi_h_integral())
        throw ConfigurationError("chi_h = " + out.inv.chi_h.get_str() + " is not an integer for " + p.label());
    out.sigma_closed_form = out.inv.sigma == -4 * (p.h() + 1);
    out.c1sq_closed_form = out.inv.c1sq == -4 * (p.g() - 1);
    out.chi_h_closed_form = out.inv.chi_h == mpq_class(1 - p.k / 2);
    return out;
}

Factorization hurwitz_move(const Factorization& f, std::size_t pos) {
    if (pos < 1 || pos >= f.size())
        throw std::out_of_range("hurwitz_move: position " + std::to_string(pos) + " outside 1.." +
                                std::to_string(f.size() > 0 ? f.size() - 1 : 0));
    Factorization out = f;
    const HomologyClass& a = f.cycles[pos - 1];
    const HomologyClass& b = f.cycles[pos];
    out.cycles[pos - 1] = b;
    out.cycles[pos] = a - b * pairing(a, b);  // T(b)^-1 a
    return out;
}

Factorization rotate(const Factorization& f, std::size_t k) {
    Factorization out{f.space, {}};
    const std::size_t n = f.size();
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) out.cycles.push_back(f.cycles[(i + k) % n]);
    return out;
}

}  // namespace twistlab
