#include "cayley/json_io.hpp"

#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
  }
}

std::uint64_t field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InvalidArgument(std::string("group spec is missing \"") + name + "\"");
  return j.at(name).get<std::uint64_t>();
}

}  // namespace

Json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const Json& j) {
  return guarded("permutation", [&] { return Permutation(j.get<std::vector<Point>>()); });
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return {{"degree", g.degree()}, {"generators", gens}};
}

PermGroup perm_group_from_json(const Json& j) {
  return guarded("permutation group", [&] {
    auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& x : j.at("generators")) {
      gens.push_back(permutation_from_json(x));
      if (gens.back().degree() != degree) throw InvalidArgument("generator degree differs from group degree");
    }
    return PermGroup(degree, std::move(gens));
  });
}

Json to_json(const BlockSystem& b) { return {{"degree", b.degree()}, {"blocks", b.blocks()}}; }

BlockSystem block_system_from_json(const Json& j) {
  return guarded("block system", [&] {
    return BlockSystem(j.at("degree").get<std::size_t>(), j.at("blocks").get<std::vector<Cell>>());
  });
}

Json to_json(const ColoredStructure& s) {
  return {{"degree", s.degree()}, {"arity", s.arity()}, {"colors", s.colors()}};
}

ColoredStructure colored_structure_from_json(const Json& j) {
  return guarded("colored structure", [&] {
    return ColoredStructure(j.at("degree").get<std::size_t>(), j.at("arity").get<unsigned>(),
                            j.at("colors").get<std::vector<std::uint32_t>>());
  });
}

Json to_json(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  Json j{{"kind", kind_name(s.kind)}};
  switch (s.kind) {
    case K::cyclic: j["n"] = s.n; break;
    case K::elementary_abelian_2: j["e"] = s.e; break;
    case K::z4:
    case K::z8:
    case K::q8: break;
    case K::dihedral:
    case K::dicyclic: j["m"] = s.m; break;
    case K::direct_product: {
      Json factors = Json::array();
      for (const auto& f : s.factors) factors.push_back(to_json(f));
      j["factors"] = factors;
      break;
    }
    case K::zn_semidirect_y:
      j["n"] = s.n;
      j["order_of_y"] = s.order_of_y;
      j["action"] = s.action;
      break;
    case K::frobenius:
      j["p"] = s.p;
      j["n"] = s.n;
      break;
  }
  return j;
}

GroupSpec group_spec_from_json(const Json& j) {
  return guarded("group spec", [&] {
    using K = GroupSpec::Kind;
    GroupSpec s;
    switch (kind_from_name(j.at("kind").get<std::string>())) {
      case K::cyclic: s = GroupSpec::cyclic(field(j, "n")); break;
      case K::elementary_abelian_2: s = GroupSpec::elementary_abelian_2(field(j, "e")); break;
      case K::z4: s = GroupSpec::z4(); break;
      case K::z8: s = GroupSpec::z8(); break;
      case K::q8: s = GroupSpec::q8(); break;
      case K::dihedral: s = GroupSpec::dihedral(field(j, "m")); break;
      case K::dicyclic: s = GroupSpec::dicyclic(field(j, "m")); break;
      case K::direct_product: {
        std::vector<GroupSpec> factors;
        for (const auto& f : j.at("factors")) factors.push_back(group_spec_from_json(f));
        s = GroupSpec::direct_product(std::move(factors));
        break;
      }
      case K::zn_semidirect_y:
        s = GroupSpec::zn_semidirect_y(field(j, "n"), field(j, "order_of_y"), field(j, "action"));
        break;
      case K::frobenius: s = GroupSpec::frobenius(field(j, "p"), field(j, "n")); break;
    }
    s.validate();
    return s;
  });
}

GroupSpec parse_group_spec(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("malformed group spec JSON");
    return group_spec_from_json(j);
  }
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string piece; std::getline(in, piece, ':');) parts.push_back(piece);
  if (parts.empty()) throw InvalidArgument("empty group spec");
  Json j{{"kind", parts[0]}};
  std::vector<std::uint64_t> args;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoull(parts[i], &used));
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number in group spec: " + parts[i]);
    }
  }
  using K = GroupSpec::Kind;
  std::vector<const char*> names;
  switch (kind_from_name(parts[0])) {
    case K::cyclic: names = {"n"}; break;
    case K::elementary_abelian_2: names = {"e"}; break;
    case K::z4:
    case K::z8:
    case K::q8: break;
    case K::dihedral:
    case K::dicyclic: names = {"m"}; break;
    case K::direct_product: throw InvalidArgument("direct products need the JSON form");
    case K::zn_semidirect_y: names = {"n", "order_of_y", "action"}; break;
    case K::frobenius: names = {"p", "n"}; break;
  }
  if (args.size() != names.size())
    throw InvalidArgument(parts[0] + " takes " + std::to_string(names.size()) + " parameter(s)");
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = args[i];
  return group_spec_from_json(j);
}

Json to_json(const CiVerdict& v) {
  Json j{{"status", status_name(v.status)}, {"classes", v.classes}};
  if (v.witness) j["witness"] = {to_json(v.witness->first), to_json(v.witness->second)};
  else j["witness"] = nullptr;
  return j;
}

Json to_json(const TowerResult& t) {
  Json tower = Json::array();
  for (const auto& b : t.tower) tower.push_back(b.blocks());
  Json j{{"conjugator", to_json(t.conjugator)}, {"tower", tower}, {"ratios", t.ratios}};
  j["exceptional_case"] = t.exceptional_case ? Json(*t.exceptional_case) : Json(nullptr);
  return j;
}

Json to_json(const HolomorphReport& h) {
  return {{"holomorph_order", h.holomorph_order.str()},
          {"is_3_closed", h.is_3_closed},
          {"left_right_conjugate", h.left_right_conjugate}};
}

}  // namespace cayley
