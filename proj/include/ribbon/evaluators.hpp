#pragma once

#include "ribbon/invariants.hpp"
#include "ribbon/poly.hpp"

#include <string>
#include <vector>

namespace ribbon {

// Variable catalogues (printing order).
const std::vector<std::string>& universal_variables(); // alpha beta gamma a_* b_*
const std::vector<std::string>& tps_variables();       // w x y z
const std::vector<std::string>& p_variables();         // b_bs b_bp b_olc b_olh

// Coefficients of U = f(e) U(G\e) + g(e) U(G/e): f from the class of G/e^c,
// g from the class of G\e^c; a_nl = sqrt(a_bp a_olh), b_nl = sqrt(b_bp b_olh).
HalfPoly f_coefficient(EdgeClass contract_class);
HalfPoly g_coefficient(EdgeClass delete_class);
// g(e) with all a's, alpha, beta, gamma set to 1 (the P ring).
HalfPoly p_coefficient(EdgeClass delete_class);

HalfPoly universal_U_state_sum(const ColouredRibbonGraph& cg);
// Processes edges in the given sequence (first element first).
HalfPoly universal_U_recursive(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order);
// Prefactor times T_ps at the universal substitution.
HalfPoly universal_U_closed_form(const ColouredRibbonGraph& cg);

HalfPoly t_ps(const ColouredRibbonGraph& cg);
HalfPoly t_s(const ColouredRibbonGraph& cg);   // vertex classes ignored
HalfPoly t_cps(const ColouredRibbonGraph& cg); // boundary classes ignored
HalfPoly t_cs(const RibbonGraph& g);

HalfPoly p_normalized(const ColouredRibbonGraph& cg);
HalfPoly p_recursive(const ColouredRibbonGraph& cg, const std::vector<EdgeId>& order);

// R(x,y,z); with a vertex partition the partitioned form is used.
HalfPoly bollobas_riordan(const RibbonGraph& g);
HalfPoly bollobas_riordan(const RibbonGraph& g, const Partition& vclass);

// K(x,y,a,b) = a^{r2(G)} b^{gamma(Sigma)/2} T_ps(G; x, 1/a, y, 1/b); needs
// discrete vertex classes.
HalfPoly krushkal(const ColouredRibbonGraph& cg, int ambient_euler_genus);

// T_ps duality plus the T_s/T_cps cross-dualities.
bool check_duality(const ColouredRibbonGraph& cg);

// Variable renaming/specialisation helpers.
HalfPoly var(const std::string& name);
HalfPoly rename(const HalfPoly& p, const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace ribbon
