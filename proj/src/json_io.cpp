#include "quillen/json_io.hpp"
#include "quillen/error.hpp"

namespace quillen {

namespace {

Json rows_of(const Matrix &m) {
  Json rows = Json::array();
  for (unsigned r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (unsigned c = 0; c < m.dim(); ++c)
      row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const Json &o, const GroupSpec *ctx) {
  std::uint64_t q = 0;
  if (o.contains("q"))
    q = o.at("q").get<std::uint64_t>();
  else if (ctx && ctx->kind == GroupKind::Matrix)
    q = ctx->q;
  else
    throw ParseError("matrix needs a field order \"q\"");
  const Json &rows = o.at("rows");
  if (!rows.is_array() || rows.empty())
    throw ParseError("matrix \"rows\" must be a non-empty array");
  const unsigned n = static_cast<unsigned>(rows.size());
  std::vector<Field::Elt> e;
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix rows must form a square array");
    for (const auto &x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw ParseError("matrix entries are field element codes >= 0");
      e.push_back(x.get<Field::Elt>());
    }
  }
  try {
    return Matrix(Field::of_order(q), n, std::move(e));
  } catch (const std::invalid_argument &ex) {
    throw ParseError(ex.what());
  }
}

template <class T> T get_or(const Json &j, const char *key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Json header(const char *type) {
  Json j;
  j["schema"] = schema_version;
  j["type"] = type;
  return j;
}

Json tuple_json(const IndexTuple &t) { return Json(t.entries); }

} // namespace

Json element_to_json(const GroupElement &g) {
  Json j;
  if (g.is_permutation()) {
    j["perm"] = g.permutation().images1();
  } else if (g.is_matrix()) {
    j["mat"] = {{"q", g.matrix().field()->order()},
                {"rows", rows_of(g.matrix())}};
  } else {
    const auto &c = g.coset();
    j["coset"] = {{"q", c.representative().field()->order()},
                  {"rows", rows_of(c.representative())},
                  {"center_order", c.center_order()}};
  }
  return j;
}

GroupElement element_from_json(const Json &j, const GroupSpec *ctx) {
  try {
    if (j.is_string()) {
      if (!ctx || ctx->kind != GroupKind::Permutation)
        throw ParseError("cycle notation needs a permutation group context");
      return Permutation::from_cycles(j.get<std::string>(), ctx->n);
    }
    if (!j.is_object())
      throw ParseError("group element must be an object or a cycle string");
    if (j.contains("perm")) {
      auto img = j.at("perm").get<std::vector<long long>>();
      return Permutation::from_images1(img);
    }
    if (j.contains("mat")) {
      Matrix m = matrix_from(j.at("mat"), ctx);
      if (ctx && ctx->quotient_center)
        return ctx->from_matrix(m);
      return m;
    }
    if (j.contains("coset")) {
      const Json &o = j.at("coset");
      Matrix m = matrix_from(o, ctx);
      unsigned k = o.contains("center_order")
                       ? o.at("center_order").get<unsigned>()
                       : (ctx ? ctx->center_order() : 1);
      return CentralCoset(m, k);
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed group element: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
  throw ParseError("group element needs \"perm\", \"mat\" or \"coset\"");
}

Json group_to_json(const GroupSpec &G) {
  Json j;
  j["name"] = G.name;
  j["kind"] = G.kind == GroupKind::Permutation ? "permutation" : "matrix";
  j["n"] = G.n;
  if (G.kind == GroupKind::Matrix)
    j["q"] = G.q;
  j["det1"] = G.det1;
  j["quotient_center"] = G.quotient_center;
  j["even_only"] = G.even_only;
  j["structural"] = G.structural;
  if (G.known_order)
    j["order"] = *G.known_order;
  Json gens = Json::array();
  for (const auto &g : G.generators)
    gens.push_back(element_to_json(g));
  j["generators"] = std::move(gens);
  j["cap"] = G.cap;
  return j;
}

GroupSpec group_from_json(const Json &j) {
  try {
    if (j.is_string())
      return named_group(j.get<std::string>());
    if (!j.is_object())
      throw ParseError("group must be a name or an object");
    const bool has_gens =
        j.contains("generators") && !j.at("generators").empty();
    if (j.contains("name") && !has_gens) {
      GroupSpec G = named_group(j.at("name").get<std::string>());
      if (j.contains("cap"))
        G.cap = j.at("cap").get<std::uint64_t>();
      return G;
    }
    GroupSpec G;
    G.name = get_or<std::string>(j, "name", "G");
    const std::string kind = get_or<std::string>(j, "kind", "permutation");
    if (kind == "permutation" || kind == "perm")
      G.kind = GroupKind::Permutation;
    else if (kind == "matrix")
      G.kind = GroupKind::Matrix;
    else
      throw ParseError("group kind must be \"permutation\" or \"matrix\"");
    G.n = j.at("n").get<unsigned>();
    if (G.kind == GroupKind::Matrix) {
      G.q = j.at("q").get<std::uint64_t>();
      Field::of_order(G.q); // validates q
    }
    G.det1 = get_or<bool>(j, "det1", false);
    G.quotient_center = get_or<bool>(j, "quotient_center", false);
    G.even_only = get_or<bool>(j, "even_only", false);
    G.structural = false;
    if (j.contains("cap"))
      G.cap = j.at("cap").get<std::uint64_t>();
    if (j.contains("order"))
      G.known_order = j.at("order").get<std::uint64_t>();
    if (!has_gens)
      throw ParseError("a group object needs a built-in \"name\" or "
                       "\"generators\"");
    for (const auto &g : j.at("generators")) {
      GroupElement x = element_from_json(g, &G);
      if (!G.admits(x))
        throw ParseError("generator " + x.to_string() +
                         " does not fit the declared group kind");
      G.generators.push_back(std::move(x));
    }
    return G;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed group: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json collection_to_json(const Collection &C) {
  Json j = header("collection");
  j["group"] = group_to_json(C.group);
  j["p"] = C.prime();
  Json basis = Json::array(), c = Json::array();
  for (const auto &e : C.E.basis())
    basis.push_back(element_to_json(e));
  for (const auto &x : C.c)
    c.push_back(element_to_json(x));
  j["basis"] = std::move(basis);
  j["c"] = std::move(c);
  j["maximality"] = to_string(C.maximality);
  return j;
}

Collection collection_from_json(const Json &j) {
  try {
    if (!j.is_object())
      throw ParseError("collection must be an object");
    Collection C;
    C.group = group_from_json(j.at("group"));
    const unsigned p = j.at("p").get<unsigned>();
    std::vector<GroupElement> basis, c;
    for (const auto &e : j.at("basis"))
      basis.push_back(element_from_json(e, &C.group));
    for (const auto &x : j.at("c"))
      c.push_back(element_from_json(x, &C.group));
    C.E = ElemAbelianBasis(p, std::move(basis));
    C.c = std::move(c);
    C.maximality = j.contains("maximality")
                       ? parse_maximality_mode(j.at("maximality").get<std::string>())
                       : default_maximality(C.group);
    validate_shape(C);
    return C;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed collection: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

Json recipe_to_json(const ConstructionRecipe &r) {
  Json j;
  j["family"] = to_string(r.family);
  j["n"] = r.n;
  if (r.q)
    j["q"] = r.q;
  j["p"] = r.p;
  if (r.kind)
    j["kind"] = to_string(*r.kind);
  if (r.d)
    j["d"] = r.d;
  j["r"] = r.r;
  if (r.family == Family::SymAlt || r.family == Family::A8p3)
    j["b"] = r.b;
  if (r.family == Family::LinearDgt1)
    j["f"] = r.f;
  if (!r.u.empty())
    j["u"] = r.u;
  if (!r.z.empty())
    j["z"] = r.z;
  if (!r.note.empty())
    j["note"] = r.note;
  return j;
}

Json construction_to_json(const Construction &c) {
  Json j = collection_to_json(c.collection);
  j["recipe"] = recipe_to_json(c.recipe);
  return j;
}

Json faithful_report_to_json(const FaithfulReport &r) {
  Json j;
  j["faithful"] = r.faithful;
  j["generator_level"] = r.generator_level;
  j["full_subspace"] = r.full_subspace;
  j["sign_vectors"] = r.sign_vectors;
  Json v = Json::array();
  for (const auto &x : r.violations)
    v.push_back({{"epsilon", x.epsilon},
                 {"removed", x.removed},
                 {"level", x.level}});
  j["violations"] = std::move(v);
  return j;
}

Json admissible_report_to_json(const AdmissibleReport &r, const Collection &C) {
  Json j = header("admissibility");
  j["group"] = C.group.name;
  j["p"] = C.prime();
  j["r"] = C.rank();
  j["admissible"] = r.admissible;
  j["maximality"] = to_string(r.maximality);
  j["membership"] = to_string(r.membership);
  j["members_ok"] = r.members_ok;
  j["conditions"] = {{"a_maximal", r.maximality != Maximality::NotMaximal},
                     {"b_centralizes_hyperplanes", r.centralizes_hyperplanes},
                     {"c_avoids_line_normalizers", r.avoids_line_normalizers},
                     {"d_pairwise_commute", r.pairwise_commute}};
  j["faithful"] = faithful_report_to_json(r.faithful);
  Json f = Json::array();
  for (const auto &x : r.failures)
    f.push_back({{"condition", x.condition}, {"detail", x.detail}});
  j["failures"] = std::move(f);
  return j;
}

Json certificate_to_json(const NonzeroClassCertificate &c) {
  Json j = header("certificate");
  j["group"] = c.group;
  j["p"] = c.p;
  j["r"] = c.r;
  j["granted"] = c.granted;
  Json at = Json::array();
  for (const auto &[delta, i] : c.C_nonzero_at)
    at.push_back({{"delta", delta}, {"i", tuple_json(i)}});
  j["C_nonzero_at"] = std::move(at);
  j["D_all_zero"] = c.D_all_zero;
  j["chain_terms"] = c.chain_terms;
  j["maximality"] = to_string(c.maximality);
  j["coefficient_ring"] = c.coefficient_ring;
  j["independent_homology_check"] = c.independent_homology_check;
  if (c.betti_top)
    j["betti_top"] = *c.betti_top;
  else
    j["betti_top"] = nullptr;
  j["detail"] = c.detail;
  return j;
}

Json coefficient_report_to_json(const CoefficientReport &r) {
  Json j;
  j["r"] = r.r;
  j["direct_matches_formula"] = r.direct_matches_formula;
  j["C_subset_of_D"] = r.C_subset_of_D;
  Json e = Json::array();
  for (const auto &x : r.entries)
    e.push_back({{"j", x.j},
                 {"i", tuple_json(x.i)},
                 {"C", x.C_direct},
                 {"D", x.D_direct}});
  j["entries"] = std::move(e);
  return j;
}

Json homology_to_json(const std::string &group, unsigned p,
                      const QdpResult &q) {
  Json j = header("homology");
  j["group"] = group;
  j["p"] = p;
  j["rank"] = q.rank;
  Json betti = Json::object(), torsion = Json::object(),
       counts = Json::object();
  for (const auto &[k, b] : q.homology.betti)
    betti[std::to_string(k)] = b;
  for (const auto &[k, t] : q.homology.torsion) {
    if (t.empty())
      continue;
    Json list = Json::array();
    for (const auto &x : t)
      list.push_back(x.str());
    torsion[std::to_string(k)] = std::move(list);
  }
  for (const auto &[k, c] : q.homology.simplex_count)
    counts[std::to_string(k)] = c;
  j["betti"] = std::move(betti);
  j["torsion"] = std::move(torsion);
  j["simplex_count"] = std::move(counts);
  j["qdp"] = q.qdp;
  return j;
}

Json obstruction_to_json(const ObstructionCertificate &c) {
  Json j = header("obstruction");
  j["group"] = c.group.name;
  j["p"] = c.p;
  j["witness"] = element_to_json(c.witness);
  j["source"] = c.source;
  return j;
}

Json search_result_to_json(const SearchResult &r) {
  Json j = header("search");
  j["group"] = r.group;
  j["p"] = r.p;
  j["outcome"] = to_string(r.outcome);
  Json found = Json::array();
  for (const auto &C : r.found)
    found.push_back(collection_to_json(C));
  j["found"] = std::move(found);
  if (r.obstruction)
    j["obstruction"] = obstruction_to_json(*r.obstruction);
  else
    j["obstruction"] = nullptr;
  // timings are left out so that reports are reproducible byte for byte
  j["stats"] = {{"group_order", r.stats.group_order},
                {"p_rank", r.stats.p_rank},
                {"maximal_subgroups", r.stats.maximal_subgroups},
                {"subgroups_searched", r.stats.subgroups_searched},
                {"skipped_by_rank", r.stats.skipped_by_rank},
                {"frames", r.stats.frames},
                {"candidate_sets", r.stats.candidate_sets},
                {"tuples_tested", r.stats.tuples_tested},
                {"nodes_visited", r.stats.nodes_visited}};
  j["detail"] = r.detail;
  return j;
}

} // namespace quillen
