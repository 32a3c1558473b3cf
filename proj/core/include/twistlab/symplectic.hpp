#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace twistlab {

using Int = std::int64_t;

// Overflow-checked integer helpers; throw ArithmeticOverflow.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// H_1 of a closed genus-g surface with basis (x1, y1, ..., xg, yg) and <x_j, y_j> = +1.
class SymplecticSpace {
public:
    explicit SymplecticSpace(int genus);

    int genus() const noexcept { return genus_; }
    int dimension() const noexcept { return 2 * genus_; }

    // Entry J(i, j) of the Gram matrix.
    Int gram(int i, int j) const noexcept;

    bool operator==(const SymplecticSpace&) const = default;

private:
    int genus_;
};

class HomologyClass {
public:
    HomologyClass(SymplecticSpace space, std::vector<Int> coords);

    static HomologyClass zero(SymplecticSpace space);
    // Handle index j is one-based.
    static HomologyClass x(SymplecticSpace space, int j);
    static HomologyClass y(SymplecticSpace space, int j);

    const SymplecticSpace& space() const noexcept { return space_; }
    std::span<const Int> coords() const noexcept { return coords_; }
    Int operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const noexcept { return coords_.size(); }

    // Zero is the class of a separating curve.
    bool is_zero() const noexcept;
    bool is_separating() const noexcept { return is_zero(); }

    HomologyClass operator-() const;
    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass operator*(Int s) const;
    HomologyClass& operator+=(const HomologyClass& o);
    HomologyClass& operator-=(const HomologyClass& o);

    bool operator==(const HomologyClass&) const = default;

private:
    SymplecticSpace space_;
    std::vector<Int> coords_;
};

// Algebraic intersection u^T J v.
Int pairing(const HomologyClass& u, const HomologyClass& v);

// Square 2g x 2g integer matrix acting on the coordinates of a space.
// Symplecticity is a checkable property, not a constructor invariant.
class SpMatrix {
public:
    explicit SpMatrix(SymplecticSpace space);  // identity
    SpMatrix(SymplecticSpace space, std::vector<Int> row_major);

    static SpMatrix identity(SymplecticSpace space) { return SpMatrix(space); }
    static SpMatrix negative_identity(SymplecticSpace space);

    const SymplecticSpace& space() const noexcept { return space_; }
    int dimension() const noexcept { return space_.dimension(); }

    Int operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * dimension() + c)]; }
    std::span<const Int> entries() const noexcept { return entries_; }

    SpMatrix operator*(const SpMatrix& o) const;
    HomologyClass operator*(const HomologyClass& v) const;

    SpMatrix transpose() const;
    // -J M^T J; the inverse whenever M is symplectic.
    SpMatrix symplectic_inverse() const;

    bool is_identity() const noexcept;
    bool is_negative_identity() const noexcept;

    bool operator==(const SpMatrix&) const = default;

private:
    friend void multiply_by_transvection(SpMatrix& m, const HomologyClass& c, int exponent);

    SymplecticSpace space_;
    std::vector<Int> entries_;
};

// Matrix of v -> v + <v, c> c (the positive Dehn twist about a curve of class c).
SpMatrix transvection(const HomologyClass& c);
// Matrix of v -> v - <v, c> c.
SpMatrix inverse_transvection(const HomologyClass& c);

// In-place right multiplication M <- M * T_c^e without forming T_c.
void multiply_by_transvection(SpMatrix& m, const HomologyClass& c, int exponent);

bool is_symplectic(const SpMatrix& m);

std::ostream& operator<<(std::ostream& os, const HomologyClass& v);
std::ostream& operator<<(std::ostream& os, const SpMatrix& m);

}  // namespace twistlab
