#pragma once

#include "fk3/cleft.hpp"
#include "fk3/forms.hpp"
#include "fk3/smash.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fk3 {

// Hochschild 2-cochain with trivial coefficients, stored on basis pairs.
using HochschildForm = BiFunctional;

// "xi0", "xi2", "xi3", or "xi^i_j" (value 1 at (x_i, x_j), zero elsewhere).
// Throws std::invalid_argument for an unknown name.
HochschildForm generator(const std::string& name);

// Signed support of xi3: +1 on the first list, -1 on the second.
const std::vector<std::pair<int, int>>& xi3_plus_support();
const std::vector<std::pair<int, int>>& xi3_minus_support();

// eta(a, 1) = eta(1, c) = 0 and eta(a, bc) = eta(ab, c) for positive-degree a, c
// and any b.
bool is_cocycle(const HochschildForm& eta);
// sum eta(h1 . a, h2 . b) = epsilon(h) eta(a, b) for every basis element h of H.
bool is_invariant(const HochschildForm& eta, const Realization& r);

struct InvariantSpace {
    std::size_t dimension = 0;
    // Basis of the solution space (values on the 144 pairs).
    std::vector<HochschildForm> basis;
};
// Exact nullspace of the cocycle and invariance constraints on all 144 pair values.
InvariantSpace invariant_cocycles(const Realization& r);
// Rank of a family of forms viewed as vectors of length 144 (constant entries only).
std::size_t form_rank(const std::vector<HochschildForm>& forms);

enum class CoboundarySign { Plus, Minus };
// Plus: (df)(a, b) = epsilon(a) f(b) - f(ab) + f(a) epsilon(b); Minus negates.
HochschildForm coboundary(const Functional& f, CoboundarySign sign = CoboundarySign::Plus);

struct CoboundaryVerdict {
    bool coboundary = false;
    // f with coboundary(f, sign) = eta, when one exists.
    std::optional<Functional> witness;
    // Rank of the 144 x 12 system and of the augmented system; unequal ranks
    // certify that no f exists.
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
};
CoboundaryVerdict is_coboundary(const HochschildForm& eta, CoboundarySign sign = CoboundarySign::Plus);

// e^eta; throws if eta(1,1) != 0.
BiFunctional hochschild_exponential(const Realization& r, const HochschildForm& eta);

struct CommutationReport {
    bool ok = true;
    // Distinct nonzero entries of both commutators, up to sign.
    std::vector<Poly> residuals;
    std::size_t nonzero_entries = 0;
};
// [eta(id (x) m), epsilon (x) eta]_* and [eta(m (x) id), eta (x) epsilon]_*
// in the convolution algebra of the braided tensor cube.
CommutationReport check_commutations(const Realization& r, const HochschildForm& eta);

// The set C of cocycles satisfying both commutations, in the coordinates of
// symbolic_invariant_cocycle:
//   pointed   {eta0 (xi0 + xi2)} u {eta3 xi3}, cut out by eta0 - eta2, eta0 eta3;
//   copointed the four coordinate axes, cut out by eta_i eta_j (i < j).
// Components are given as substitutions of the eta variables.
std::vector<std::vector<Poly>> commutation_set_components(const Realization& r);
std::vector<Poly> commutation_set_equations(const Realization& r);

// g lies in the ideal generated by gens, certified by a linear combination of
// monomial multiples of total degree <= max(deg g, max_degree).
bool in_ideal(const Poly& g, const std::vector<Poly>& gens, int max_degree);

struct LocusReport {
    // Every residual vanishes identically on every component of C.
    bool contains_set = true;
    // Some power of each defining equation of C lies in the residual ideal.
    bool inside_set = true;
    std::vector<std::string> certificates;
    bool equals_set() const { return contains_set && inside_set; }
};
// Common zero set of the residuals compared with C.
LocusReport compare_with_commutation_set(const Realization& r, const std::vector<Poly>& residuals);

// e^eta # epsilon run through the ordinary cocycle axiom on the bosonization.
// Symbolic eta: triples of total degree <= max_degree (default 6); numeric
// eta: all triples unless max_degree >= 0.
CocycleReport exponential_is_hopf(const Realization& r, const HochschildForm& eta, int max_degree = -2,
                                  int workers = 1);

// Symbolic invariant cocycles in the eta contexts:
//   pointed   eta0 xi0 + eta2 xi2 + eta3 xi3
//   copointed eta0 xi^0_0 + eta1 xi^1_1 + eta2 xi^2_2 + eta3 xi3
HochschildForm symbolic_invariant_cocycle(const Realization& r);

// Functional that is 1 at 1, value at the top word, zero elsewhere.
Functional top_functional(const Poly& top_value);

struct PurityVerdict {
    enum class Kind { Trivial, Exponential, Pure };
    Kind kind = Kind::Pure;
    // Exponential: eta, the witness alpha, and the certification
    // alpha -> sigma == e^eta.
    std::optional<HochschildForm> eta;
    std::optional<Functional> alpha;
    bool certified = false;
    std::string eta_description;
    // Pure: the forced equality that fails.
    std::string obstruction;
};
const char* to_string(PurityVerdict::Kind k);

// Decides purity of the cocycle of a cleft object with numeric parameters by
// the forced values alpha(x_i) = alpha(x_ix_j) = alpha(x_ix_jx_i) = 0:
//   pointed:   eta0 = mu, eta2 = lambda/3, exponential iff eta0 = eta2;
//   copointed: eta_i = c_i, exponential iff eta_i eta_j = 0 for i != j.
// Exponential verdicts take eta3 so that alpha(top) = 0 and certify the
// equality exactly in the bosonization.
PurityVerdict classify_purity(const CleftParams& p, const Realization& r);

}  // namespace fk3
