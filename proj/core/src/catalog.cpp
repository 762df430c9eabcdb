#include "kuelsh/catalog.hpp"

namespace kuelsh {
namespace {

// Two vertices, a loop alpha at 1 and arrows gamma: 1 -> 2, beta: 2 -> 1.
// The nonstandard member of the pair: beta.gamma = beta.alpha.gamma is a
// nonzero relation and the form also takes the value 1 on alpha^3.
const char* kLambda2 = R"(
vertices 1 2
arrow alpha: 1 -> 1
arrow gamma: 1 -> 2
arrow beta: 2 -> 1
rel alpha.alpha.gamma
rel beta.alpha.alpha
rel gamma.beta.gamma
rel beta.gamma.beta
rel beta.gamma - beta.alpha.gamma
rel alpha.alpha.alpha - gamma.beta
form 1 = 0
form alpha = 0
form alpha.alpha = 0
form alpha.alpha.alpha = 1
form alpha.alpha.alpha.alpha = 1
form gamma = 0
form alpha.gamma = 0
form 2 = 0
form beta = 0
form beta.alpha = 0
form beta.alpha.gamma = 1
)";

const char* kLambda2p = R"(
vertices 1 2
arrow alpha: 1 -> 1
arrow gamma: 1 -> 2
arrow beta: 2 -> 1
rel alpha.alpha.alpha - gamma.beta
rel beta.gamma
rel beta.alpha.alpha
rel alpha.alpha.gamma
form 1 = 0
form alpha = 0
form alpha.alpha = 0
form alpha.alpha.alpha = 0
form alpha.alpha.alpha.alpha = 1
form gamma = 0
form alpha.gamma = 0
form 2 = 0
form beta = 0
form beta.alpha = 0
form beta.alpha.gamma = 1
)";

// Two vertices, loops alpha at 1 and beta at 2, arrows sigma: 1 -> 2 and
// gamma: 2 -> 1; scalar lambda outside {0, 1}.
const char* kLambda3 = R"(
vertices 1 2
arrow alpha: 1 -> 1
arrow beta: 2 -> 2
arrow sigma: 1 -> 2
arrow gamma: 2 -> 1
rel alpha.alpha.alpha.alpha
rel gamma.alpha.alpha
rel alpha.alpha.sigma
rel alpha.alpha - sigma.gamma - alpha.alpha.alpha
rel lambda*beta.beta - gamma.sigma
rel gamma.alpha - beta.gamma
rel sigma.beta - alpha.sigma
form 1 = 0
form 2 = 0
form alpha = 0
form beta = 0
form sigma = 0
form gamma = 0
form alpha.alpha = 1
form alpha.sigma = 0
form beta.beta = 0
form gamma.alpha = 0
form alpha.alpha.alpha = 1
form beta.beta.beta = 1/lambda
)";

const char* kLambda3p = R"(
vertices 1 2
arrow alpha: 1 -> 1
arrow beta: 2 -> 2
arrow sigma: 1 -> 2
arrow gamma: 2 -> 1
rel alpha.alpha - sigma.gamma
rel lambda*beta.beta - gamma.sigma
rel gamma.alpha - beta.gamma
rel sigma.beta - alpha.sigma
form 1 = 0
form 2 = 0
form alpha = 0
form beta = 0
form sigma = 0
form gamma = 0
form alpha.alpha = 0
form alpha.sigma = 0
form beta.beta = 0
form gamma.alpha = 0
form alpha.alpha.alpha = 1
form beta.beta.beta = 1/lambda
)";

// Three vertices, loop alpha at 2, beta: 1 -> 2, gamma: 2 -> 1,
// delta: 2 -> 3, sigma: 3 -> 2.
const char* kLambda5 = R"(
vertices 1 2 3
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
arrow delta: 2 -> 3
arrow sigma: 3 -> 2
rel alpha.alpha - gamma.beta
rel alpha.alpha.alpha - delta.sigma
rel beta.delta
rel sigma.gamma
rel alpha.delta
rel sigma.alpha
rel gamma.beta.gamma
rel beta.gamma.beta
rel beta.gamma - beta.alpha.gamma
form 1 = 0
form 2 = 0
form 3 = 0
form alpha = 0
form beta = 0
form gamma = 0
form delta = 0
form sigma = 0
form alpha.gamma = 0
form alpha.alpha = 1
form beta.alpha = 0
form alpha.alpha.alpha = 1
form sigma.delta = 1
form beta.alpha.gamma = 1
)";

const char* kLambda5p = R"(
vertices 1 2 3
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
arrow delta: 2 -> 3
arrow sigma: 3 -> 2
rel alpha.alpha - gamma.beta
rel beta.delta
rel beta.gamma
rel sigma.gamma
rel alpha.delta
rel sigma.alpha
rel alpha.alpha.alpha - delta.sigma
form 1 = 0
form 2 = 0
form 3 = 0
form alpha = 0
form beta = 0
form gamma = 0
form delta = 0
form sigma = 0
form alpha.gamma = 0
form alpha.alpha = 0
form beta.alpha = 0
form alpha.alpha.alpha = 1
form sigma.delta = 1
form beta.alpha.gamma = 1
)";

// Four vertices: 1 top, 2 middle, 3 bottom-left, 4 bottom-right.
// gamma: 1 -> 2, delta: 2 -> 1, beta: 2 -> 3, epsilon: 2 -> 4,
// alpha: 3 -> 2, xi: 4 -> 2.  Symmetric only in characteristic 2.
const char* kLambda9 = R"(
vertices 1 2 3 4
arrow gamma: 1 -> 2
arrow delta: 2 -> 1
arrow beta: 2 -> 3
arrow epsilon: 2 -> 4
arrow alpha: 3 -> 2
arrow xi: 4 -> 2
rel beta.alpha + delta.gamma + epsilon.xi
rel gamma.delta
rel xi.epsilon
rel alpha.beta.alpha
rel beta.alpha.beta
rel alpha.beta - alpha.delta.gamma.beta
)";

const char* kLambda9p = R"(
vertices 1 2 3 4
arrow gamma: 1 -> 2
arrow delta: 2 -> 1
arrow beta: 2 -> 3
arrow epsilon: 2 -> 4
arrow alpha: 3 -> 2
arrow xi: 4 -> 2
rel beta.alpha + delta.gamma + epsilon.xi
rel alpha.beta
rel xi.epsilon
rel gamma.delta
)";

// Three vertices in a line with arrows both ways; scalar lambda.
const char* kA1 = R"(
vertices 1 2 3
arrow alpha: 1 -> 2
arrow gamma: 2 -> 1
arrow sigma: 2 -> 3
arrow beta: 3 -> 2
rel alpha.gamma.alpha - alpha.sigma.beta
rel beta.gamma.alpha - lambda*beta.sigma.beta
rel gamma.alpha.gamma - sigma.beta.gamma
rel gamma.alpha.sigma - lambda*sigma.beta.sigma
)";

const char* kA4 = R"(
vertices 1 2 3 4
arrow gamma: 1 -> 2
arrow delta: 2 -> 1
arrow beta: 2 -> 3
arrow epsilon: 2 -> 4
arrow alpha: 3 -> 2
arrow xi: 4 -> 2
rel beta.alpha + delta.gamma + epsilon.xi
rel alpha.beta
rel gamma.epsilon
rel xi.delta
)";

// Trivial extensions of the tubular canonical algebras.  Vertex w is the
// source of the star, vertex o its sink, and eta, xi run from o back to w.
const char* kT2222 = R"(
vertices a b o w c d
arrow alpha2: a -> o
arrow beta2: b -> o
arrow eta: o -> w
arrow xi: o -> w
arrow alpha1: w -> a
arrow beta1: w -> b
arrow gamma1: w -> c
arrow sigma1: w -> d
arrow gamma2: c -> o
arrow sigma2: d -> o
rel alpha1.alpha2 + beta1.beta2 + gamma1.gamma2
rel alpha1.alpha2 + lambda*beta1.beta2 + sigma1.sigma2
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta2.xi
rel eta.gamma1 - xi.gamma1
rel gamma2.eta - gamma2.xi
rel eta.sigma1 - lambda*xi.sigma1
rel sigma2.eta - lambda*sigma2.xi
)";

const char* kT333 = R"(
vertices a3 a2 o w b3 b2 c3 c2
arrow alpha3: a3 -> o
arrow alpha2: a2 -> a3
arrow eta: o -> w
arrow xi: o -> w
arrow alpha1: w -> a2
arrow beta1: w -> b2
arrow gamma1: w -> c2
arrow beta3: b3 -> o
arrow beta2: b2 -> b3
arrow gamma3: c3 -> o
arrow gamma2: c2 -> c3
rel alpha1.alpha2.alpha3 + beta1.beta2.beta3 + gamma1.gamma2.gamma3
rel eta.alpha1
rel alpha3.eta
rel xi.beta1
rel beta3.xi
rel eta.gamma1 - xi.gamma1
rel gamma3.eta - gamma3.xi
rel alpha2.alpha3.xi.alpha1.alpha2
rel beta2.beta3.eta.beta1.beta2
rel gamma2.gamma3.eta.gamma1.gamma2
)";

const char* kT244 = R"(
vertices a o w b4 b3 b2 c4 c3 c2
arrow alpha2: a -> o
arrow eta: o -> w
arrow xi: o -> w
arrow alpha1: w -> a
arrow beta1: w -> b2
arrow gamma1: w -> c2
arrow beta4: b4 -> o
arrow beta3: b3 -> b4
arrow beta2: b2 -> b3
arrow gamma4: c4 -> o
arrow gamma3: c3 -> c4
arrow gamma2: c2 -> c3
rel alpha1.alpha2 + beta1.beta2.beta3.beta4 + gamma1.gamma2.gamma3.gamma4
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta4.xi
rel eta.gamma1 - xi.gamma1
rel gamma4.eta - gamma4.xi
rel beta2.beta3.beta4.eta.beta1.beta2
rel beta3.beta4.eta.beta1.beta2.beta3
rel gamma2.gamma3.gamma4.eta.gamma1.gamma2
rel gamma3.gamma4.eta.gamma1.gamma2.gamma3
)";

const char* kT236 = R"(
vertices a o w b3 b2 c6 c5 c4 c3 c2
arrow alpha2: a -> o
arrow eta: o -> w
arrow xi: o -> w
arrow alpha1: w -> a
arrow beta1: w -> b2
arrow gamma1: w -> c2
arrow beta3: b3 -> o
arrow beta2: b2 -> b3
arrow gamma6: c6 -> o
arrow gamma5: c5 -> c6
arrow gamma4: c4 -> c5
arrow gamma3: c3 -> c4
arrow gamma2: c2 -> c3
rel alpha1.alpha2 + beta1.beta2.beta3 + gamma1.gamma2.gamma3.gamma4.gamma5.gamma6
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta3.xi
rel eta.gamma1 - xi.gamma1
rel gamma6.eta - gamma6.xi
rel beta2.beta3.eta.beta1.beta2
rel gamma2.gamma3.gamma4.gamma5.gamma6.eta.gamma1.gamma2
rel gamma3.gamma4.gamma5.gamma6.eta.gamma1.gamma2.gamma3
rel gamma4.gamma5.gamma6.eta.gamma1.gamma2.gamma3.gamma4
rel gamma5.gamma6.eta.gamma1.gamma2.gamma3.gamma4.gamma5
)";

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"Lambda2", kLambda2, false, 0,
       "two simples, tubular type (3,3,3); nonstandard in characteristic 3"},
      {"Lambda2p", kLambda2p, false, 0, "two simples, tubular type (3,3,3); standard"},
      {"Lambda3", kLambda3, true, 0,
       "two simples, tubular type (2,2,2,2); nonstandard in characteristic 2"},
      {"Lambda3p", kLambda3p, true, 0,
       "two simples, tubular type (2,2,2,2); standard"},
      {"Lambda5", kLambda5, false, 0,
       "three simples, tubular type (2,4,4); nonstandard in characteristic 2"},
      {"Lambda5p", kLambda5p, false, 0, "three simples, tubular type (2,4,4); standard"},
      {"Lambda9", kLambda9, false, 2,
       "four simples, tubular type (3,3,3); nonstandard, symmetric only in characteristic 2"},
      {"Lambda9p", kLambda9p, false, 2,
       "four simples, tubular type (3,3,3); the Dynkin D4 preprojective algebra"},
      {"A1", kA1, true, 0, "three simples, tubular type (2,2,2,2); standard"},
      {"A4", kA4, false, 0, "four simples, tubular type (3,3,3); standard"},
      {"T2222", kT2222, true, 0, "trivial extension of the canonical algebra of type (2,2,2,2)"},
      {"T333", kT333, false, 0, "trivial extension of the canonical algebra of type (3,3,3)"},
      {"T244", kT244, false, 0, "trivial extension of the canonical algebra of type (2,4,4)"},
      {"T236", kT236, false, 0, "trivial extension of the canonical algebra of type (2,3,6)"},
  };
  return entries;
}

Presentation catalog_lookup(const std::string& name, const Field& field,
                            const std::map<std::string, std::uint64_t>& params) {
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) {
      entry = &e;
      break;
    }
  }
  if (!entry) fail(errc::unknown_name, "unknown catalog name '" + name + "'");

  if (entry->required_char != 0 && field.p() != entry->required_char)
    fail(errc::characteristic_mismatch,
         name + " is symmetric only in characteristic " +
             std::to_string(entry->required_char) + ", got " +
             std::to_string(field.p()));

  for (const auto& [pname, value] : params) {
    if (pname != "lambda" || !entry->needs_lambda)
      fail(errc::bad_param, "unexpected param '" + pname + "' for " + name);
    if (value >= field.size())
      fail(errc::bad_param, "param value out of field range");
  }
  std::string header = "field " + std::to_string(field.p()) + " " +
                       std::to_string(field.k()) + "\n";
  if (entry->needs_lambda) {
    auto it = params.find("lambda");
    if (it == params.end())
      fail(errc::missing_param, name + " requires the scalar param lambda");
    if (it->second == 0 || it->second == 1)
      fail(errc::param_forbidden_value,
           name + " requires lambda outside {0, 1}");
    header += "param lambda = " + field.format(it->second) + "\n";
  }

  Presentation p = parse_presentation(header + entry->body);
  p.name = name;
  return p;
}

}  // namespace kuelsh
