#include "groupcx/json_io.hpp"

namespace groupcx {

GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ValidationError(ValidationError::Kind::BadSpec,
                          "group spec: expected an object with a family");
  const std::string family = j.at("family").get<std::string>();
  auto need_int = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
      throw ValidationError(ValidationError::Kind::BadSpec,
                            std::string("group spec: missing integer field ") + key);
    return j.at(key).get<int>();
  };
  if (family == "cyclic") return GroupSpec::cyclic(need_int("n"));
  if (family == "dihedral") return GroupSpec::dihedral(need_int("n"));
  if (family == "symmetric") return GroupSpec::symmetric(need_int("n"));
  if (family == "alternating") return GroupSpec::alternating(need_int("n"));
  if (family == "abelian") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "group spec: abelian needs a factors array");
    return GroupSpec::abelian(j.at("factors").get<std::vector<int>>());
  }
  if (family == "perm") {
    if (!j.contains("generators") || !j.at("generators").is_array())
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "group spec: perm needs a generators array");
    return GroupSpec::perm(
        need_int("degree"),
        j.at("generators").get<std::vector<std::vector<int>>>());
  }
  if (family == "table") {
    if (!j.contains("table") || !j.at("table").is_array())
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "group spec: table needs a table array");
    return GroupSpec::from_table(j.at("table").get<std::vector<std::vector<int>>>());
  }
  if (family == "product") {
    if (!j.contains("left") || !j.contains("right"))
      throw ValidationError(ValidationError::Kind::BadSpec,
                            "group spec: product needs left and right");
    return GroupSpec::product(group_spec_from_json(j.at("left")),
                              group_spec_from_json(j.at("right")));
  }
  if (family == "wreath_cyclic")
    return GroupSpec::wreath_cyclic(need_int("m"), need_int("n"));
  throw ValidationError(ValidationError::Kind::BadSpec,
                        "group spec: unknown family " + family);
}

Json group_spec_to_json(const GroupSpec& spec) {
  Json j;
  switch (spec.family) {
    case GroupSpec::Family::Cyclic:
      j["family"] = "cyclic";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Dihedral:
      j["family"] = "dihedral";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Symmetric:
      j["family"] = "symmetric";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Alternating:
      j["family"] = "alternating";
      j["n"] = spec.n;
      break;
    case GroupSpec::Family::Abelian:
      j["family"] = "abelian";
      j["factors"] = spec.factors;
      break;
    case GroupSpec::Family::Perm:
      j["family"] = "perm";
      j["degree"] = spec.degree;
      j["generators"] = spec.generators;
      break;
    case GroupSpec::Family::Table:
      j["family"] = "table";
      j["table"] = spec.table;
      break;
    case GroupSpec::Family::Product:
      j["family"] = "product";
      j["left"] = group_spec_to_json(*spec.left);
      j["right"] = group_spec_to_json(*spec.right);
      break;
    case GroupSpec::Family::WreathCyclic:
      j["family"] = "wreath_cyclic";
      j["m"] = spec.m;
      j["n"] = spec.n;
      break;
  }
  return j;
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_int64()) return Json(v.to_int64());
  return Json(v.to_string());
}

Json complex_to_json(const SimplicialComplex& c) {
  ComplexStats st = c.stats();
  Json j;
  j["vertices"] = c.vertex_labels();
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(f.vertices);
  j["facets"] = std::move(facets);
  j["dimension"] = st.dimension;
  j["pure"] = st.is_pure;
  Json fv = Json::array();
  for (const auto& x : st.f_vector) fv.push_back(bigint_to_json(x));
  j["f_vector"] = std::move(fv);
  return j;
}

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Json gk_to_json(const GKComplex& c, int cover_number) {
  Json j;
  j["primes"] = c.primes;
  Json facets = Json::array();
  for (const auto& f : c.complex.facets()) {
    Json facet = Json::array();
    for (int v : f.vertices) facet.push_back(c.primes[size_t(v)]);
    facets.push_back(std::move(facet));
  }
  j["facets"] = std::move(facets);
  j["cover_number"] = cover_number;
  return j;
}

Json homology_to_json(const HomologySummary& h) {
  Json j;
  j["reduced"] = h.reduced;
  Json groups = Json::array();
  for (const auto& grp : h.groups) {
    // display clamps at degree 0; the empty complex notes its (-1)-degree rank
    if (grp.dim < 0) {
      j["note"] = "empty complex: reduced homology has rank 1 in degree -1";
      continue;
    }
    Json g;
    g["dim"] = grp.dim;
    g["betti"] = grp.betti;
    Json torsion = Json::array();
    for (const auto& t : grp.torsion) torsion.push_back(bigint_to_json(t));
    g["torsion"] = std::move(torsion);
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  j["euler"] = bigint_to_json(h.euler);
  return j;
}

Json generation_report_to_json(const GenerationReport& r, const FiniteGroup& g) {
  auto facet_labels = [&](const std::vector<std::vector<int>>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) {
      Json one = Json::array();
      for (int x : s) one.push_back(g.label(x));
      out.push_back(std::move(one));
    }
    return out;
  };
  Json j;
  j["pure"] = r.is_pure;
  j["every_facet_generates"] = r.every_facet_generates;
  j["max_facets_generate"] = r.max_facets_generate;
  j["max_facet_size"] = r.max_facet_size;
  j["non_generating_facets"] = facet_labels(r.non_generating_facets);
  j["non_generating_max_facets"] = facet_labels(r.non_generating_max_facets);
  return j;
}

Json coincidence_to_json(const CoincidenceVerdict& v, const FiniteGroup& g) {
  Json j;
  j["coincide"] = v.coincide;
  Json witness = Json::array();
  for (int x : v.witness) witness.push_back(g.label(x));
  j["witness"] = std::move(witness);
  j["eppo"] = v.eppo;
  return j;
}

}  // namespace groupcx
