#include "twistlab/symplectic.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "twistlab/errors.hpp"

namespace twistlab {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
    if (genus < 1) throw ParameterError("genus must be positive, got " + std::to_string(genus));
}

Int SymplecticSpace::gram(int i, int j) const noexcept {
    if (i / 2 != j / 2) return 0;
    if (i % 2 == 0 && j == i + 1) return 1;
    if (i % 2 == 1 && j == i - 1) return -1;
    return 0;
}

namespace {

void require_same(const SymplecticSpace& a, const SymplecticSpace& b) {
    if (a != b)
        throw DimensionError("symplectic spaces differ: genus " + std::to_string(a.genus()) + " vs " +
                             std::to_string(b.genus()));
}

// Coordinates of J c.
std::vector<Int> apply_j(std::span<const Int> c) {
    std::vector<Int> out(c.size());
    for (std::size_t i = 0; i < c.size(); i += 2) {
        out[i] = c[i + 1];
        out[i + 1] = -c[i];
    }
    return out;
}

}  // namespace

HomologyClass::HomologyClass(SymplecticSpace space, std::vector<Int> coords)
    : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(space_.dimension()))
        throw DimensionError("homology class needs " + std::to_string(space_.dimension()) +
                             " coordinates, got " + std::to_string(coords_.size()));
}

HomologyClass HomologyClass::zero(SymplecticSpace space) {
    return HomologyClass(space, std::vector<Int>(static_cast<std::size_t>(space.dimension()), 0));
}

HomologyClass HomologyClass::x(SymplecticSpace space, int j) {
    if (j < 1 || j > space.genus()) throw DimensionError("handle index out of range: " + std::to_string(j));
    auto v = zero(space);
    v.coords_[static_cast<std::size_t>(2 * (j - 1))] = 1;
    return v;
}

HomologyClass HomologyClass::y(SymplecticSpace space, int j) {
    if (j < 1 || j > space.genus()) throw DimensionError("handle index out of range: " + std::to_string(j));
    auto v = zero(space);
    v.coords_[static_cast<std::size_t>(2 * (j - 1) + 1)] = 1;
    return v;
}

bool HomologyClass::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

HomologyClass HomologyClass::operator-() const {
    auto v = *this;
    for (auto& c : v.coords_) c = checked_sub(0, c);
    return v;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    require_same(space_, o.space_);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
    return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
    require_same(space_, o.space_);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
    return *this;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    auto v = *this;
    v += o;
    return v;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
    auto v = *this;
    v -= o;
    return v;
}

HomologyClass HomologyClass::operator*(Int s) const {
    auto v = *this;
    for (auto& c : v.coords_) c = checked_mul(c, s);
    return v;
}

Int pairing(const HomologyClass& u, const HomologyClass& v) {
    require_same(u.space(), v.space());
    Int sum = 0;
    for (std::size_t i = 0; i < u.size(); i += 2) {
        sum = checked_add(sum, checked_sub(checked_mul(u[i], v[i + 1]), checked_mul(u[i + 1], v[i])));
    }
    return sum;
}

SpMatrix::SpMatrix(SymplecticSpace space)
    : space_(space), entries_(static_cast<std::size_t>(space.dimension() * space.dimension()), 0) {
    const int n = dimension();
    for (int i = 0; i < n; ++i) entries_[static_cast<std::size_t>(i * n + i)] = 1;
}

SpMatrix::SpMatrix(SymplecticSpace space, std::vector<Int> row_major)
    : space_(space), entries_(std::move(row_major)) {
    if (entries_.size() != static_cast<std::size_t>(space.dimension() * space.dimension()))
        throw DimensionError("matrix needs " + std::to_string(space.dimension() * space.dimension()) +
                             " entries, got " + std::to_string(entries_.size()));
}

SpMatrix SpMatrix::negative_identity(SymplecticSpace space) {
    SpMatrix m(space);
    for (auto& e : m.entries_) e = -e;
    return m;
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
    require_same(space_, o.space_);
    const int n = dimension();
    std::vector<Int> out(entries_.size(), 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Int a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Int b = o(k, j);
                if (b == 0) continue;
                auto& slot = out[static_cast<std::size_t>(i * n + j)];
                slot = checked_add(slot, checked_mul(a, b));
            }
        }
    }
    return SpMatrix(space_, std::move(out));
}

HomologyClass SpMatrix::operator*(const HomologyClass& v) const {
    require_same(space_, v.space());
    const int n = dimension();
    std::vector<Int> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = s;
    }
    return HomologyClass(space_, std::move(out));
}

SpMatrix SpMatrix::transpose() const {
    const int n = dimension();
    std::vector<Int> out(entries_.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j * n + i)] = (*this)(i, j);
    return SpMatrix(space_, std::move(out));
}

SpMatrix SpMatrix::symplectic_inverse() const {
    // (-J M^T J)_{ij} = -sum J_{ia} M_{ba} J_{bj}; J has one nonzero per row.
    const int n = dimension();
    auto partner = [](int i) { return i % 2 == 0 ? i + 1 : i - 1; };
    auto sign = [](int i) -> Int { return i % 2 == 0 ? 1 : -1; };
    std::vector<Int> out(entries_.size());
    for (int i = 0; i < n; ++i) {
        const int a = partner(i);
        for (int j = 0; j < n; ++j) {
            // J_{bj} nonzero for b = partner(j) with value -sign(j).
            const int b = partner(j);
            out[static_cast<std::size_t>(i * n + j)] = sign(i) * sign(j) * (*this)(b, a);
        }
    }
    return SpMatrix(space_, std::move(out));
}

bool SpMatrix::is_identity() const noexcept {
    const int n = dimension();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool SpMatrix::is_negative_identity() const noexcept {
    const int n = dimension();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((*this)(i, j) != (i == j ? -1 : 0)) return false;
    return true;
}

void multiply_by_transvection(SpMatrix& m, const HomologyClass& c, int exponent) {
    // M T_c^e = M + e (M c)(J c)^T
    require_same(m.space_, c.space());
    const int n = m.dimension();
    const auto jc = apply_j(c.coords());
    const HomologyClass mc = m * c;
    for (int i = 0; i < n; ++i) {
        const Int a = checked_mul(mc[static_cast<std::size_t>(i)], exponent);
        if (a == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (jc[static_cast<std::size_t>(j)] == 0) continue;
            auto& slot = m.entries_[static_cast<std::size_t>(i * n + j)];
            slot = checked_add(slot, checked_mul(a, jc[static_cast<std::size_t>(j)]));
        }
    }
}

SpMatrix transvection(const HomologyClass& c) {
    SpMatrix m(c.space());
    multiply_by_transvection(m, c, 1);
    return m;
}

SpMatrix inverse_transvection(const HomologyClass& c) {
    SpMatrix m(c.space());
    multiply_by_transvection(m, c, -1);
    return m;
}

bool is_symplectic(const SpMatrix& m) {
    // Columns m_i must satisfy <m_i, m_j> = J_{ij}.
    const int n = m.dimension();
    const auto& sp = m.space();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Int s = 0;
            for (int r = 0; r < n; r += 2) {
                s = checked_add(s, checked_sub(checked_mul(m(r, i), m(r + 1, j)), checked_mul(m(r + 1, i), m(r, j))));
            }
            if (s != sp.gram(i, j)) return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const SpMatrix& m) {
    const int n = m.dimension();
    for (int i = 0; i < n; ++i) {
        os << '[';
        for (int j = 0; j < n; ++j) os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

}  // namespace twistlab
