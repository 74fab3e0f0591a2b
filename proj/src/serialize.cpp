#include "abideal/serialize.hpp"

namespace abideal {

json to_json(const RootSystem& sys, const Root& r) {
  json a = json::array();
  for (int i = 0; i < sys.rank(); ++i) a.push_back(r.c[i]);
  return a;
}

json to_json(const RootSystem& sys, const Coroot& t) {
  json a = json::array();
  for (int i = 0; i < sys.rank(); ++i) a.push_back(t.c[i]);
  return a;
}

json to_json(const RootSystem& sys, const AffineRoot& r) {
  return json{{"coeffs", to_json(sys, r.finite)}, {"level", r.level}};
}

json to_json(const RootSystem& sys, const WeylElement& v) {
  json a = json::array();
  for (const Root& r : v.images()) a.push_back(to_json(sys, r));
  return a;
}

json ideal_record(const RootSystem& sys, const Ideal& i) {
  json phi = json::array();
  for (int p = 0; p < sys.positive_count(); ++p)
    if (i.phi.test(p)) phi.push_back(to_json(sys, sys.positive_root(p)));
  AffineWeylElement w = w_of_ideal(sys, i);
  return json{{"phi", phi},
              {"dim", i.dim()},
              {"abelian", is_abelian_set(sys, i.phi)},
              {"nilpotence", nilpotence_index(sys, i)},
              {"w", json{{"tau", to_json(sys, w.tau)}, {"v_images", to_json(sys, w.v)}}},
              {"F", to_json(sys, F_map(sys, w))}};
}

Root root_from_json(const RootSystem& sys, const json& j) {
  Root r;
  if (!j.is_array() || static_cast<int>(j.size()) != sys.rank())
    throw std::invalid_argument("root coefficient array has wrong length");
  for (int i = 0; i < sys.rank(); ++i) r.c[i] = j[i].get<int16_t>();
  if (!sys.is_root(r)) throw std::invalid_argument("not a root: " + j.dump());
  return r;
}

Coroot coroot_from_json(const RootSystem& sys, const json& j) {
  Coroot t;
  if (!j.is_array() || static_cast<int>(j.size()) != sys.rank())
    throw std::invalid_argument("coroot coefficient array has wrong length");
  for (int i = 0; i < sys.rank(); ++i) t.c[i] = j[i].get<int16_t>();
  return t;
}

Ideal ideal_from_json(const RootSystem& sys, const json& j) {
  Ideal i;
  for (const json& rc : j.at("phi")) i.phi.set(sys.index_of(root_from_json(sys, rc)));
  return i;
}

json xpoint_record(const RootSystem& sys, const XPoint& xp) {
  json chain = json::array();
  for (int i = 0; i < xp.chain.length(); ++i) {
    json basis = json::array();
    for (int a : xp.chain.pis[i]) basis.push_back(a + 1);
    SubsystemDescriptor sub{parabolic_basis(sys, xp.chain.pis[i]), true};
    chain.push_back(json{{"simples", basis},
                         {"type", classify_subsystem(sys, sub).str()},
                         {"theta", to_json(sys, xp.chain.thetas[i])}});
  }
  return json{{"tau", to_json(sys, xp.tau)},
              {"coweights", coweight_label(sys, xp.tau)},
              {"label", theta_sum_label(sys, xp)},
              {"k", xp.chain.length()},
              {"chain", chain}};
}

std::string csv_escape(const std::string& field) {
  bool need = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!need) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace abideal
