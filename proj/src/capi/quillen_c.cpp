#include "quillen/quillen.h"

#include "quillen/error.hpp"
#include "quillen/json_io.hpp"
#include "quillen/suite.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct ql_group {
  quillen::GroupSpec spec;
};

struct ql_collection {
  quillen::Collection value;
};

namespace {

using namespace quillen;

thread_local std::string last_error;

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ql_status put(char **out, const Json &j) {
  if (out)
    *out = dup_string(j.dump(2));
  return QL_OK;
}

// Runs f, mapping exceptions to status codes and recording the message.
template <class F> ql_status guarded(F &&f) {
  try {
    last_error.clear();
    return f();
  } catch (const CapExceeded &e) {
    last_error = e.what();
    return QL_CAPPED;
  } catch (const ParseError &e) {
    last_error = e.what();
    return QL_PARSE_ERROR;
  } catch (const nlohmann::json::exception &e) {
    last_error = e.what();
    return QL_PARSE_ERROR;
  } catch (const InternalError &e) {
    last_error = e.what();
    return QL_INTERNAL_ERROR;
  } catch (const std::invalid_argument &e) {
    last_error = e.what();
    return QL_INVALID_ARGUMENT;
  } catch (const std::out_of_range &e) {
    last_error = e.what();
    return QL_INVALID_ARGUMENT;
  } catch (const std::exception &e) {
    last_error = e.what();
    return QL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return QL_ERROR;
  }
}

ql_status null_arg(const char *what) {
  last_error = std::string("null argument: ") + what;
  return QL_INVALID_ARGUMENT;
}

Json parse(const char *text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Construction construct(const Json &req) {
  const std::string family = req.at("family").get<std::string>();
  auto num = [&](const char *k) { return req.at(k).get<unsigned>(); };
  if (family == "sym-alt")
    return symmetric_alternating(num("n"), num("p"),
                                 req.value("alternating", false));
  if (family == "a8")
    return a8_p3(req.value("symmetric", false));
  if (family == "sl42")
    return sl42();
  if (family == "sl62")
    return sl62();
  if (family == "linear" || family == "projective") {
    const unsigned n = num("n"), p = num("p");
    const std::uint64_t q = req.at("q").get<std::uint64_t>();
    LinearKind kind = parse_linear_kind(
        req.value("kind", family == "projective" ? "PSL" : "SL"));
    if (kind == LinearKind::PGL || kind == LinearKind::PSL)
      return projective_linear(n, q, p, kind);
    if (kind != LinearKind::GL && kind != LinearKind::SL)
      throw std::invalid_argument("no builder for unitary groups");
    if (q % p == 0)
      throw std::invalid_argument("p must not divide q");
    if (multiplicative_order_mod(q, p) > 1)
      return linear_d_gt_1(n, q, p, kind);
    if (kind == LinearKind::GL)
      throw std::invalid_argument("GL(n,q) with p | q-1 has a central "
                                  "p-element; see the obstruction command");
    return linear_d_eq_1(n, q, p);
  }
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

} // namespace

extern "C" {

const char *ql_version(void) { return "1.0.0"; }

const char *ql_status_string(ql_status s) {
  switch (s) {
  case QL_OK:
    return "ok";
  case QL_REFUTED:
    return "refuted";
  case QL_CAPPED:
    return "capped";
  case QL_INVALID_ARGUMENT:
    return "invalid-argument";
  case QL_PARSE_ERROR:
    return "parse-error";
  case QL_INTERNAL_ERROR:
    return "internal-error";
  case QL_ERROR:
    return "error";
  }
  return "unknown";
}

const char *ql_last_error(void) { return last_error.c_str(); }

void ql_string_free(char *s) { std::free(s); }

ql_status ql_group_named(const char *name, ql_group **out) {
  if (!name || !out)
    return null_arg("name/out");
  return guarded([&] {
    *out = new ql_group{named_group(name)};
    return QL_OK;
  });
}

ql_status ql_group_from_json(const char *json, ql_group **out) {
  if (!json || !out)
    return null_arg("json/out");
  return guarded([&] {
    *out = new ql_group{group_from_json(parse(json))};
    return QL_OK;
  });
}

ql_status ql_group_to_json(const ql_group *g, char **out) {
  if (!g || !out)
    return null_arg("group/out");
  return guarded([&] { return put(out, group_to_json(g->spec)); });
}

ql_status ql_group_order(const ql_group *g, uint64_t *out) {
  if (!g || !out)
    return null_arg("group/out");
  return guarded([&] {
    *out = enumerate_group(g->spec)->size();
    return QL_OK;
  });
}

void ql_group_free(ql_group *g) { delete g; }

ql_status ql_collection_from_json(const char *json, ql_collection **out) {
  if (!json || !out)
    return null_arg("json/out");
  return guarded([&] {
    *out = new ql_collection{collection_from_json(parse(json))};
    return QL_OK;
  });
}

ql_status ql_collection_to_json(const ql_collection *c, char **out) {
  if (!c || !out)
    return null_arg("collection/out");
  return guarded([&] { return put(out, collection_to_json(c->value)); });
}

ql_status ql_collection_rank(const ql_collection *c, unsigned *out) {
  if (!c || !out)
    return null_arg("collection/out");
  *out = c->value.rank();
  return QL_OK;
}

void ql_collection_free(ql_collection *c) { delete c; }

ql_status ql_construct(const char *request_json, ql_collection **out,
                       char **collection_json) {
  if (!request_json)
    return null_arg("request");
  return guarded([&] {
    Construction c = construct(parse(request_json));
    if (collection_json)
      put(collection_json, construction_to_json(c));
    if (out)
      *out = new ql_collection{std::move(c.collection)};
    return QL_OK;
  });
}

ql_status ql_obstruction(const char *kind, unsigned n, uint64_t q, unsigned p,
                         char **report) {
  if (!kind)
    return null_arg("kind");
  return guarded([&] {
    auto cert = obstruction_family(parse_linear_kind(kind), n, q, p);
    return put(report, obstruction_to_json(cert));
  });
}

ql_status ql_verify(const ql_collection *c, char **report) {
  if (!c)
    return null_arg("collection");
  return guarded([&] {
    auto rep = is_admissible(c->value);
    put(report, admissible_report_to_json(rep, c->value));
    return rep.admissible ? QL_OK : QL_REFUTED;
  });
}

ql_status ql_certify(const ql_collection *c, char **report) {
  if (!c)
    return null_arg("collection");
  return guarded([&] {
    try {
      auto cert = certify_nonzero_class(c->value);
      put(report, certificate_to_json(cert));
      return QL_OK;
    } catch (const CertificationFailed &e) {
      last_error = e.what();
      put(report, certificate_to_json(e.certificate()));
      return QL_REFUTED;
    }
  });
}

ql_status ql_homology(const ql_group *g, unsigned p, char **report) {
  if (!g)
    return null_arg("group");
  return guarded([&] {
    auto q = qdp_check(g->spec, p);
    put(report, homology_to_json(g->spec.name, p, q));
    return q.qdp ? QL_OK : QL_REFUTED;
  });
}

ql_status ql_search(const ql_group *g, unsigned p, const char *limits_json,
                    char **report) {
  if (!g)
    return null_arg("group");
  return guarded([&] {
    SearchLimits lim;
    if (limits_json) {
      Json j = parse(limits_json);
      lim.max_results = j.value("max_results", lim.max_results);
      if (j.value("all", false))
        lim.max_results = 0;
      lim.max_rank = j.value("max_rank", lim.max_rank);
      lim.time_budget = j.value("time_budget", lim.time_budget);
      lim.force = j.value("force", lim.force);
      lim.frame_reduction = j.value("frame_reduction", lim.frame_reduction);
      lim.conjugacy_reduction =
          j.value("conjugacy_reduction", lim.conjugacy_reduction);
      lim.cap = j.value("cap", lim.cap);
    }
    auto r = search_admissible(g->spec, p, lim);
    put(report, search_result_to_json(r));
    switch (r.outcome) {
    case SearchOutcome::Found:
      return QL_OK;
    case SearchOutcome::Capped:
      last_error = r.detail;
      return QL_CAPPED;
    default:
      return QL_REFUTED;
    }
  });
}

ql_status ql_paper_suite(const char *options_json, char **report) {
  return guarded([&] {
    SuiteOptions opts;
    if (options_json) {
      Json j = parse(options_json);
      if (j.contains("only"))
        for (int id : j.at("only"))
          opts.only.insert(id);
      if (j.contains("fault") && !j.at("fault").is_null())
        opts.fault = j.at("fault").get<int>();
      opts.seed = j.value("seed", opts.seed);
    }
    auto r = paper_suite(opts);
    put(report, suite_to_json(r));
    return r.all_passed ? QL_OK : QL_REFUTED;
  });
}

} // extern "C"
