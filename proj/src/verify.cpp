#include <json.hpp>

#include "facnum/errors.hpp"
#include "facnum/exactform.hpp"
#include "facnum/lattice.hpp"

namespace facnum {

namespace {

// Inside a p-group: H is elementary abelian iff its generators commute
// pairwise and each has order p.
bool member_is_elementary(const SubgroupLattice& l, std::size_t h, Prime p) {
  const FiniteGroup& g = l.group();
  const auto& gens = l.generators(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (g.element_order(gens[i]) != p) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

unsigned log_base(std::size_t v, Prime p) {
  unsigned k = 0;
  while (v > 1) {
    v /= p;
    ++k;
  }
  return k;
}

}  // namespace

bool InversionReport::passed() const {
  if (eq1_sum != f2_bruteforce) return false;
  if (eq2_lattice_form && *eq2_lattice_form != f2_bruteforce) return false;
  if (eq2_quotient_form && *eq2_quotient_form != f2_bruteforce) return false;
  if (!quotient_sizes_match) return false;
  if (hall_agrees && !*hall_agrees) return false;
  return true;
}

InversionReport verify_inversion(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  InversionReport r;
  r.label = g.label();
  r.f2_bruteforce = f2_bruteforce(l);

  const MobiusTable top = mobius_to_top(l);
  const std::vector<BigInt> pairs = permuting_pairs_below(l);
  r.eq1_sum = 0;
  for (std::size_t h = 0; h < l.size(); ++h) {
    if (top.mu_to_top[h] != 0) r.eq1_sum += pairs[h] * top.mu_to_top[h];
  }

  const std::vector<BigInt> bottom = mobius_from_bottom(l);
  if (const auto pp = prime_power_order(g.order()); pp && pp->p != 0) {
    bool ok = true;
    for (std::size_t h = 0; h < l.size() && ok; ++h) {
      const bool elem = member_is_elementary(l, h, pp->p);
      ok = bottom[h] == hall_mobius(log_base(l.order_of(h), pp->p), pp->p, elem);
    }
    r.hall_agrees = ok;
  }

  if (!g.is_commutative()) {
    r.skipped = "non-abelian group: the |L(H)|^2 forms assume sd(H) = 1 and lattice duality";
    return r;
  }

  BigInt lattice_form = 0;
  for (std::size_t h = 0; h < l.size(); ++h) {
    const BigInt below = l.down(h).size();
    lattice_form += below * below * top.mu_to_top[h];
  }
  r.eq2_lattice_form = lattice_form;

  LatticeOptions sub;
  sub.max_subgroups = l.max_subgroups();
  sub.threads = l.threads();
  BigInt quotient_form = 0;
  for (std::size_t h = 0; h < l.size(); ++h) {
    if (bottom[h] == 0) continue;
    const FiniteGroup q = quotient(g, l.subgroup(h));
    const std::size_t size = enumerate_subgroups(q, sub).size();
    if (size != l.up(h).size()) r.quotient_sizes_match = false;
    quotient_form += BigInt(size) * size * bottom[h];
    r.quotient_terms.push_back({h, l.order_of(h), size, bottom[h]});
  }
  r.eq2_quotient_form = quotient_form;
  return r;
}

InversionReport verify_inversion(const FiniteGroup& g, const LatticeOptions& options) {
  return verify_inversion(enumerate_subgroups(g, options));
}

HallReport verify_hall(const SubgroupLattice& l) {
  const FiniteGroup& g = l.group();
  const auto pp = prime_power_order(g.order());
  if (!pp) {
    throw DomainError("verify_hall requires a p-group; |" + g.label() + "| = " +
                      std::to_string(g.order()) + " is not a prime power");
  }
  HallReport r;
  r.p = pp->p;
  r.n = pp->n;
  r.elementary = is_elementary_abelian(g).has_value();
  r.mu_lattice = mobius_to_top(l).mu_to_top[l.trivial_index()];
  r.mu_hall = pp->p == 0 ? BigInt(1) : hall_mobius(pp->n, pp->p, r.elementary);
  return r;
}

HallReport verify_hall(const FiniteGroup& g, const LatticeOptions& options) {
  if (!prime_power_order(g.order())) {
    throw DomainError("verify_hall requires a p-group; |" + g.label() + "| = " +
                      std::to_string(g.order()) + " is not a prime power");
  }
  return verify_hall(enumerate_subgroups(g, options));
}

std::string lattice_to_json(const SubgroupLattice& l) {
  nlohmann::ordered_json doc;
  doc["label"] = l.group().label();
  doc["order"] = std::to_string(l.group().order());
  doc["subgroup_count"] = std::to_string(l.size());
  auto subs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    nlohmann::ordered_json s;
    s["index"] = i;
    s["order"] = std::to_string(l.order_of(i));
    s["bits"] = l.subgroup(i).members().to_hex();
    s["normal"] = l.is_normal(i);
    subs.push_back(std::move(s));
  }
  doc["subgroups"] = std::move(subs);
  auto mu = nlohmann::ordered_json::array();
  for (const BigInt& v : mobius_to_top(l).mu_to_top) mu.push_back(v.str());
  doc["mobius_to_top"] = std::move(mu);
  doc["f2"] = f2_bruteforce(l).str();
  doc["sd"] = to_string(sd(l).value);
  return doc.dump(2);
}

}  // namespace facnum
