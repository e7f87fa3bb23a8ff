#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morava/cyclotomic.hpp"
#include "morava/matrix_groups.hpp"

namespace morava {

// Eigenvalue multiplicities of a p-regular matrix of order t: entry j counts
// the eigenvalue omega^j, omega = zeta^((p^r-1)/t) for the fixed primitive
// element zeta of F_{p^r}, r = ord_t(p).
std::vector<std::size_t> eigenvalue_multiplicities(const FpMatrix& m, unsigned order);

// Lifted eigenvalues of g (as roots of unity of order t = ord(g)).
std::vector<Cyclotomic> lift_eigenvalues(const FpMatrix& g);
// Multiplicative order of an invertible matrix.
unsigned matrix_order(const FpMatrix& g);

// Brauer character of a p-regular element from its action matrix on a module.
Cyclotomic character_from_action(const FpMatrix& action, unsigned order);

// chi_{L^k_{n,d}}(g) = (1/(p^n-1)) sum_tau tau^{-k} prod_i (1 + lambda_i tau + ... + (lambda_i tau)^{p^n-1}),
// tau over the (p^n-1)-th roots of unity; `reduced` drops the monomial 1 at k = 0.
Cyclotomic character_via_eq31(unsigned p, unsigned n, unsigned k, const std::vector<Cyclotomic>& lambdas,
                              bool reduced = false);
// f_g(1) = prod_i (1 + lambda_i + ... + lambda_i^{p^n-1}).
Cyclotomic generating_function_at_one(unsigned p, unsigned n, const std::vector<Cyclotomic>& lambdas);

struct Lemma32Result {
    Cyclotomic lhs, rhs;
    bool holds() const { return lhs == rhs; }
};
// chi_{L^k_{n,d+r}}(g x I_r) versus chi_{L^k_{n,d}}(g) + ((p^{nr}-1)/(p^n-1)) f_g(1).
Lemma32Result lemma32_check(const FpMatrix& g, unsigned r, unsigned n, unsigned k);

// Fixed points of g on the coset space G/H.
std::size_t perm_character(const GroupData& G, const SubgroupSpec& H, ElementIndex g);

std::size_t gaussian_binomial(unsigned n, unsigned i, unsigned p);

// Orbit types of GL_d(F_p) on Hom(V, F_p^n): maps with image of dimension i
// form m(n,i) = [n choose i]_p orbits, each with stabilizer H(ker) of the
// given order.
struct HomOrbitType {
    unsigned image_dim = 0;
    unsigned kernel_dim = 0;
    std::size_t multiplicity = 0;
    std::size_t stabilizer_order = 0;
    std::size_t orbit_size = 0;
};
std::vector<HomOrbitType> hom_orbit_decomposition(unsigned p, unsigned n, unsigned d);

// Number of linear maps phi: F_p^d -> F_p^n (as d x n matrices) with g phi = phi,
// by enumeration.
std::size_t hom_fixed_points(const FpMatrix& g, unsigned n);

struct CharacterRow {
    std::string class_label;
    unsigned order = 1;
    std::string module;
    Cyclotomic value;
};

struct KuhnRow {
    std::string class_label;
    unsigned order = 1;
    Cyclotomic character_sum;
    std::size_t fixed_points = 0;
    bool pass() const;
};
struct KuhnReport {
    std::vector<KuhnRow> rows;
    bool skipped = false;
    std::string note;
    bool pass() const;
};
// Sum over k of chi(K^k)(g), from the action matrices, against the fixed
// points of g on Hom(V, F_p^n), for every p-regular class of GL_d(F_p).
KuhnReport kuhn_character_check(unsigned p, unsigned n, unsigned d, std::size_t max_group_order = 10000);

enum class Obstruction { None, Irrational, NotNonNegativeInteger, ExceedsDimension };
struct ObstructionVerdict {
    Obstruction kind = Obstruction::None;
    std::string class_label;
    std::string describe() const;
};
// The first row (the identity) supplies the dimension.
ObstructionVerdict perm_obstruction(const std::vector<CharacterRow>& rows);

}  // namespace morava
