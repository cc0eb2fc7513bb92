// Generates decomposition-number and Q-hat data files.
//
//   cjcalc-gen decomp --type A2 -p 2 --bound 4 --restricted-weyl
//   cjcalc-gen qhat   --type A2 -p 2 -r 1 [--decomp-data rows.json | --restricted-weyl]
//
// Decomposition rows are obtained by expanding chi(lam) in the simple basis,
// starting from restricted simple characters that are either read from a
// file or declared equal to the Weyl characters (true for A2 with p = 2).
//
// Q-hat characters come from G_rT theory: with Z(mu) the baby Verma module
// of highest weight mu, ch Z(mu) = e^mu prod_{alpha > 0} (1 + e^-alpha + ... + e^-(q-1)alpha),
// and BGG reciprocity gives ch Q-hat_r(lam) = sum_mu [Z(mu) : L-hat(lam)] ch Z(mu)
// over lam <= mu <= lam + 2(q-1) rho.

#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "cjcalc/io.hpp"

namespace {

using namespace cjcalc;

ProviderPtr restricted_provider(const RootSystemPtr& rs, Int p, const std::string& decomp_path, bool restricted_weyl) {
  if (!decomp_path.empty()) return provider_from_json(read_json_file(decomp_path), rs);
  if (!restricted_weyl) throw InputError("pass --decomp-data or --restricted-weyl");
  std::map<Weight, DecompositionRow> rows;
  for (const Weight& lam : restricted_weights(*rs, p, 1)) rows[lam] = DecompositionRow{{lam, 1}};
  return DecompositionProvider::from_rows(rs, p, std::move(rows));
}

Character baby_verma(const Weight& mu, Int q, const RootSystem& rs) {
  Character out(rs.rank());
  out.add_term(mu, 1);
  for (const PositiveRoot& alpha : rs.positive_roots()) {
    Character string(rs.rank());
    for (Int n = 0; n < q; ++n) string.add_term(-n * alpha.weight, 1);
    out = multiply(out, string);
  }
  return out;
}

// ch L-hat_r(nu) = ch L(nu_0) e^{q nu_1} with nu_0 q-restricted.
Character simple_gt(const Weight& nu, Int q, const DecompositionProvider& provider) {
  Weight low(nu.rank()), high(nu.rank());
  for (std::size_t i = 0; i < nu.rank(); ++i) {
    high[i] = floor_div(nu[i], q);
    low[i] = nu[i] - q * high[i];
  }
  Character out(nu.rank());
  const Weight shift = q * high;
  for (const auto& [w, m] : provider.simple_character(low).terms()) out.add_term(w + shift, m);
  return out;
}

// [Z(mu) : L-hat(lam)] by peeling from the top in height order.
Int baby_verma_multiplicity(const Weight& mu, const Weight& lam, Int q, const DecompositionProvider& provider) {
  const RootSystem& rs = provider.root_system();
  Character rest = baby_verma(mu, q, rs);
  Int found = 0;
  while (!rest.empty()) {
    const Weight* top = nullptr;
    Int best = 0;
    for (const auto& [w, m] : rest.terms()) {
      const Int h = rs.height_key(w);
      if (!top || h > best) top = &w, best = h;
    }
    const Weight nu = *top;
    const Int c = rest.mult(nu);
    if (c < 0) throw InvariantError("negative remainder while peeling Z(" + to_string(mu) + ")");
    if (nu == lam) found += c;
    rest -= simple_gt(nu, q, provider).scaled(c);
  }
  return found;
}

Character qhat_character(const Weight& lam, Int q, const DecompositionProvider& provider) {
  const RootSystem& rs = provider.root_system();
  const auto two_rho = rs.root_coordinates(2 * rs.rho());
  const std::size_t n = rs.rank();
  Character out(n);
  std::vector<Int> k(n, 0);
  for (;;) {
    Weight mu = lam;
    for (std::size_t i = 0; i < n; ++i) mu += k[i] * rs.simple_root(i);
    if (Int m = baby_verma_multiplicity(mu, lam, q, provider)) out += baby_verma(mu, q, rs).scaled(m);
    std::size_t i = 0;
    while (i < n && k[i] == (q - 1) * (*two_rho)[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data file generator for cjcalc", "cjcalc-gen"};
  app.require_subcommand(1);
  std::string type = "A2";
  Int p = 2, r = 1, bound = 4;
  std::string decomp_path;
  bool restricted_weyl = false;
  auto* decomp_cmd = app.add_subcommand("decomp", "Decomposition rows for the dominant box [0, bound]");
  auto* qhat_cmd = app.add_subcommand("qhat", "Q-hat characters for all restricted weights");
  for (auto* sub : {decomp_cmd, qhat_cmd}) {
    sub->add_option("--type", type)->capture_default_str();
    sub->add_option("-p", p)->capture_default_str();
    sub->add_option("--decomp-data", decomp_path, "Restricted rows to start from");
    sub->add_flag("--restricted-weyl", restricted_weyl, "Take restricted simple characters equal to Weyl characters");
  }
  decomp_cmd->add_option("--bound", bound)->capture_default_str();
  qhat_cmd->add_option("-r", r)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    const RootSystemPtr rs = RootSystem::of_type(type);
    const Int q = checked_pow(p, r);
    const ProviderPtr provider = restricted_provider(rs, p, decomp_path, restricted_weyl);
    Json doc;
    if (decomp_cmd->parsed()) {
      Json rows = Json::array();
      for (const Weight& lam : dominant_box(*rs, bound)) {
        Json factors = Json::array();
        for (const auto& [mu, m] : to_simple_basis(weyl_character(lam, *rs), *provider).coeffs)
          factors.push_back({{"mu", weight_to_json(mu)}, {"mult", m}});
        rows.push_back({{"lambda", weight_to_json(lam)}, {"factors", std::move(factors)}});
      }
      doc = {{"type", type}, {"p", p}, {"rows", std::move(rows)}};
    } else {
      Json entries = Json::array();
      for (const Weight& lam : restricted_weights(*rs, p, r))
        entries.push_back({{"lambda", weight_to_json(lam)}, {"qhat", character_to_json(qhat_character(lam, q, *provider))}});
      doc = {{"type", type}, {"p", p}, {"r", r}, {"entries", std::move(entries)}};
    }
    std::cout << doc.dump(1) << '\n';
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
