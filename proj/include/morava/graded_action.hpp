#pragma once

#include <string>
#include <vector>

#include "morava/truncated_algebra.hpp"

namespace morava {

// K: formal-group-law action; L: linear substitution.
enum class Variant { K, L };

const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

// Images of every monomial of the truncated algebra under one matrix.
class AlgebraAutomorphism {
public:
    AlgebraAutomorphism(const AlgebraContext& ctx, const FpMatrix& g, Variant variant);

    const AlgebraElement& image(MonomialIndex m) const { return images_[m]; }
    const std::vector<AlgebraElement>& generator_images() const { return generator_images_; }

private:
    std::vector<AlgebraElement> generator_images_;
    std::vector<AlgebraElement> images_;
};

// Monomials of grade class k, ordered by total length, then mixed-radix index.
struct PieceBasis {
    unsigned k = 0;
    bool reduced = false;
    std::vector<MonomialIndex> monomials;
    // position[m] = place of monomial m in the basis, or -1.
    std::vector<int> position;
};

PieceBasis piece_basis(const AlgebraContext& ctx, unsigned k, bool reduced);

// Column c holds the coordinates of the image of basis monomial c.
FpMatrix piece_matrix(const AlgebraAutomorphism& phi, const PieceBasis& basis, unsigned p);

struct GradedAction {
    unsigned p = 0, n = 0, d = 0, k = 0;
    Variant variant = Variant::K;
    bool reduced = false;
    std::vector<std::string> labels;
    std::vector<MonomialIndex> basis;
    std::vector<std::vector<unsigned>> basis_exponents;
    std::vector<FpMatrix> matrices;

    std::size_t dimension() const { return basis.size(); }
};

GradedAction build_graded_action(const AlgebraContext& ctx, const std::vector<FpMatrix>& gens, unsigned k,
                                 Variant variant, bool reduced, std::vector<std::string> labels = {});

// All grade classes 0 .. p^n - 2 at once, sharing the monomial images.
std::vector<GradedAction> build_all_pieces(const AlgebraContext& ctx, const std::vector<FpMatrix>& gens,
                                           Variant variant, bool reduced, std::vector<std::string> labels = {});

// Grade-k monomials all of whose exponents are divisible by m.
std::size_t count_divisible_monomials(const AlgebraContext& ctx, unsigned k, unsigned m, bool reduced);

}  // namespace morava
