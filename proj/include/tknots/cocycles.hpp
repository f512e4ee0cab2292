#pragma once

#include <cstdint>

#include "tknots/chains.hpp"

namespace tknots {

/// theta_n(x,y,z) = (x-y)((2z-y)^n + y^n - 2z^n)/n mod n, with the division
/// done over Z after checking exact divisibility.
int64_t mochizuki_value(int n, int64_t x, int64_t y, int64_t z);

/// SB degree-2 cocycle over dihedral(n), n an odd prime.
CochainTable mochizuki_2cocycle(int n);
/// SB degree-3 cocycle (x,y,z,w) -> theta_n(y,z,w).
CochainTable mochizuki_3cocycle(int n);

/// theta'((x,y_1),...,(x,y_n)) = theta(x, x\y_1, ..., x\y_n), so theta = theta' o mu_n.
CochainTable transport_mu(const CochainTable& theta, const ShadowBiquandle& sb);

/// Rescaled local-biquandle forms of degree 2 or 3 (4 times the transported ones).
CochainTable closed_form_LB(int n, int degree);
/// Forms on X^3 (degree 1) and X^4 (degree 2) obtained through the vertical bracket.
CochainTable closed_form_N(int n, int degree);

/// N-form induced from an LB cochain of degree 2 or 3 through <x,y,z> = solve_third:
/// degree 1: (x,y,z) -> lb((x,y),(x,<x,y,z>));
/// degree 2: (x,y,z,w) -> lb((x,y),(x,<x,y,z>),(x,<x,y,<y,z,w>>)).
CochainTable compose_through_bracket(const CochainTable& lb, const HorizontalTribracket& t);

CochainTable scaled(const CochainTable& theta, int64_t k);

/// Parses "mochizuki:<n>" or throws InputError.
int parse_mochizuki_spec(const std::string& spec);

}  // namespace tknots
