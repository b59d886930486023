#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "recond/bipoly.hpp"
#include "recond/groupdata.hpp"

namespace recond {

/// Generators of D_{n,q} in the order matching Character::rot.
enum class GenKind { Psi2q, Tau, Phi, TauPhi };

inline std::vector<GenKind> group_generators(const GroupData& gd) {
    if (gd.nq_odd) return {GenKind::Psi2q, GenKind::Tau, GenKind::Phi};
    return {GenKind::Psi2q, GenKind::TauPhi};
}

/// Coefficient times root of unity after a group action on a rational term:
/// magnitude * e^{2 pi i rotation} * x^a y^b. A negative rational coefficient
/// is folded into the rotation as 1/2.
struct RotatedTerm {
    int a = 0, b = 0;
    Rat magnitude;  // > 0
    Rat rotation;   // mod 1
};

/// Rotation the generator applies to the monomial x^a y^b, and the image
/// exponents. Diagonal generators keep (a,b) and rotate by a multiple of a-b
/// (psi) or a+b (phi); the anti-diagonal ones swap to (b,a).
inline Rat generator_rotation(const GroupData& gd, GenKind g, int a, int b) {
    switch (g) {
        case GenKind::Psi2q: return mod1(make_rat(Int(a - b), 2 * gd.q));
        case GenKind::Phi: return mod1(make_rat(Int(a + b), 2 * (gd.n - gd.q)));
        case GenKind::Tau: return mod1(make_rat(a + b, 4));
        case GenKind::TauPhi:
            return mod1(make_rat(a + b, 4) + make_rat(Int(a + b), 4 * (gd.n - gd.q)));
    }
    throw std::logic_error("unreachable");
}

inline bool generator_swaps(GenKind g) { return g == GenKind::Tau || g == GenKind::TauPhi; }

inline std::vector<RotatedTerm> act_generator(const BiPoly& p, const GroupData& gd, GenKind g) {
    std::vector<RotatedTerm> out;
    out.reserve(p.term_count());
    const bool swap = generator_swaps(g);
    for (const auto& [m, c] : p.terms()) {
        RotatedTerm t;
        t.a = swap ? m.b : m.a;
        t.b = swap ? m.a : m.b;
        t.rotation = generator_rotation(gd, g, m.a, m.b);
        if (c < 0) {
            t.magnitude = -c;
            t.rotation = mod1(t.rotation + make_rat(1, 2));
        } else {
            t.magnitude = c;
        }
        out.push_back(t);
    }
    return out;
}

/// True iff g.p = chi(g).p for every generator g, compared term by term with
/// magnitudes equal and rotations congruent mod 1.
inline bool is_relative_invariant(const BiPoly& p, const GroupData& gd, const Character& chi) {
    if (p.is_zero()) throw std::domain_error("is_relative_invariant: zero polynomial");
    if (chi.q != gd.q || chi.nmq != gd.n - gd.q || chi.nq_odd != gd.nq_odd)
        throw std::domain_error("is_relative_invariant: character of a different group");
    auto gens = group_generators(gd);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (const auto& t : act_generator(p, gd, gens[gi])) {
            Rat target = p.coeff(t.a, t.b);
            if (target == 0) return false;
            Rat mag = target < 0 ? Rat(-target) : target;
            Rat expected_rot = mod1(chi.rot[gi] + (target < 0 ? make_rat(1, 2) : Rat(0)));
            if (mag != t.magnitude || mod1(t.rotation - expected_rot) != 0) return false;
        }
    }
    return true;
}

/// Extract the character by which the group acts on p, or nullopt if p is not
/// a relative eigenvector.
inline std::optional<Character> derive_character(const BiPoly& p, const GroupData& gd) {
    if (p.is_zero()) return std::nullopt;
    Character ch;
    ch.nq_odd = gd.nq_odd;
    ch.q = gd.q;
    ch.nmq = gd.n - gd.q;
    auto gens = group_generators(gd);
    for (GenKind g : gens) {
        std::optional<Rat> rot;
        for (const auto& t : act_generator(p, gd, g)) {
            Rat target = p.coeff(t.a, t.b);
            if (target == 0) return std::nullopt;
            Rat mag = target < 0 ? Rat(-target) : target;
            if (mag != t.magnitude) return std::nullopt;
            Rat r = mod1(t.rotation - (target < 0 ? make_rat(1, 2) : Rat(0)));
            if (!rot) {
                rot = r;
            } else if (*rot != r) {
                return std::nullopt;
            }
        }
        ch.rot.push_back(*rot);
    }
    return ch;
}

namespace detail {

/// Congruences cutting out the diagonal-subgroup isotypic piece. The diagonal
/// subgroup is <psi_2q, phi_2(n-q)> when n-q is odd and <psi_2q, (tau phi)^2>
/// when it is even.
inline bool diagonal_congruences(const GroupData& gd, const Character& chi, int a, int b) {
    if (mod1(make_rat(Int(a - b), 2 * gd.q) - chi.rot[0]) != 0) return false;
    if (gd.nq_odd) {
        return mod1(make_rat(Int(a + b), 2 * (gd.n - gd.q)) - chi.rot[2]) == 0;
    }
    // (tau phi_{4(n-q)})^2 = -eps_{2(n-q)} I acts by (a+b)(n-q+1)/(2(n-q)).
    Rat rot = make_rat(Int(a + b) * (gd.n - gd.q + 1), 2 * (gd.n - gd.q));
    return mod1(rot - 2 * chi.rot.back()) == 0;
}

inline Rat antidiagonal_rotation(const GroupData& gd, int a, int b) {
    GenKind g = gd.nq_odd ? GenKind::Tau : GenKind::TauPhi;
    return generator_rotation(gd, g, a, b);
}

inline Rat antidiagonal_char(const Character& chi) { return chi.rot[1]; }

}  // namespace detail

/// Dimension of the degree-d slice of the chi-relative-invariant module,
/// counted combinatorially: monomials satisfying the diagonal congruences are
/// paired (a,b) <-> (b,a) by the anti-diagonal generator; each off-diagonal
/// pair carries one fixed vector, a diagonal monomial counts iff its rotation
/// matches chi.
inline long relative_invariant_dim(const GroupData& gd, const Character& chi, int degree) {
    if (degree < 0) return 0;
    long count = 0;
    for (int a = 0; a <= degree; ++a) {
        int b = degree - a;
        if (a < b) continue;
        if (!detail::diagonal_congruences(gd, chi, a, b)) continue;
        if (a > b) {
            ++count;
        } else {
            Rat rot = detail::antidiagonal_rotation(gd, a, a);
            if (mod1(rot - detail::antidiagonal_char(chi)) == 0) ++count;
        }
    }
    return count;
}

/// Rational basis of the same space: x^a y^b + s x^b y^a with s = +-1 fixed by
/// the anti-diagonal generator, plus admissible diagonal monomials.
inline std::vector<BiPoly> relative_invariant_basis(const GroupData& gd, const Character& chi,
                                                    int degree) {
    std::vector<BiPoly> basis;
    if (degree < 0) return basis;
    const Rat half = make_rat(1, 2);
    for (int a = degree; 2 * a >= degree; --a) {
        int b = degree - a;
        if (!detail::diagonal_congruences(gd, chi, a, b)) continue;
        Rat rot = detail::antidiagonal_rotation(gd, a, b);
        Rat diff = mod1(rot - detail::antidiagonal_char(chi));
        if (a == b) {
            if (diff == 0) basis.push_back(BiPoly::monomial(a, a));
            continue;
        }
        if (diff != 0 && diff != half)
            throw std::logic_error("relative_invariant_basis: non-real pairing sign");
        BiPoly p = BiPoly::monomial(a, b);
        p.add_term(b, a, diff == 0 ? Rat(1) : Rat(-1));
        basis.push_back(p);
    }
    if (static_cast<long>(basis.size()) != relative_invariant_dim(gd, chi, degree))
        throw std::logic_error("relative_invariant_basis: size disagrees with dimension count");
    return basis;
}

}  // namespace recond
