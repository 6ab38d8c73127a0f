// quillen-lab: command line front end over the C API.
#include "quillen/quillen.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Exit code from a status: 0 ok, 1 refuted/none, 2 capped or error.
int exit_code(ql_status s) {
  if (s == QL_OK)
    return 0;
  if (s == QL_REFUTED)
    return 1;
  return 2;
}

int fail(ql_status s) {
  std::cerr << "quillen-lab: " << ql_status_string(s) << ": "
            << ql_last_error() << "\n";
  return exit_code(s);
}

struct Output {
  bool json = false;
  std::string file;

  void emit(const std::string &text) const {
    if (!file.empty()) {
      std::ofstream out(file);
      out << text << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

// Takes ownership of a report string.
std::string take(char *s) {
  std::string out = s ? s : "";
  ql_string_free(s);
  return out;
}

ql_group *open_group(const std::string &arg, ql_status &st) {
  ql_group *g = nullptr;
  if (std::filesystem::is_regular_file(arg))
    st = ql_group_from_json(read_input(arg).c_str(), &g);
  else if (!arg.empty() && arg.front() == '{')
    st = ql_group_from_json(arg.c_str(), &g);
  else
    st = ql_group_named(arg.c_str(), &g);
  return g;
}

ql_collection *open_collection(const std::string &path, ql_status &st) {
  ql_collection *c = nullptr;
  st = ql_collection_from_json(read_input(path).c_str(), &c);
  return c;
}

void print_summary(const Json &j) {
  const std::string type = j.value("type", "");
  if (type == "admissibility") {
    std::cout << j["group"].get<std::string>() << " p=" << j["p"]
              << " r=" << j["r"] << ": "
              << (j["admissible"].get<bool>() ? "admissible" : "not admissible")
              << " (maximality " << j["maximality"].get<std::string>()
              << ", faithful " << j["faithful"]["faithful"] << ")\n";
    for (const auto &f : j["failures"])
      std::cout << "  (" << f["condition"].get<std::string>() << ") "
                << f["detail"].get<std::string>() << "\n";
  } else if (type == "certificate") {
    std::cout << j["group"].get<std::string>() << " p=" << j["p"]
              << " r=" << j["r"] << ": certificate "
              << (j["granted"].get<bool>() ? "granted" : "refused")
              << ", D all zero " << j["D_all_zero"] << ", independent check "
              << j["independent_homology_check"].get<std::string>() << "\n";
    if (!j["detail"].get<std::string>().empty())
      std::cout << "  " << j["detail"].get<std::string>() << "\n";
  } else if (type == "homology") {
    std::cout << j["group"].get<std::string>() << " p=" << j["p"]
              << " rank=" << j["rank"] << " betti=" << j["betti"].dump()
              << " torsion=" << j["torsion"].dump() << " qdp=" << j["qdp"]
              << "\n";
  } else if (type == "search") {
    std::cout << j["group"].get<std::string>() << " p=" << j["p"] << ": "
              << j["outcome"].get<std::string>() << " ("
              << j["found"].size() << " found, "
              << j["stats"]["subgroups_searched"] << " subgroups, "
              << j["stats"]["frames"] << " frames)\n";
    if (!j["detail"].get<std::string>().empty())
      std::cout << "  " << j["detail"].get<std::string>() << "\n";
  } else if (type == "suite") {
    for (const auto &c : j["criteria"]) {
      std::cout << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " ["
                << c["id"] << "] " << c["name"].get<std::string>() << " ("
                << c["seconds"].get<double>() << " s)\n";
      for (const auto &f : c["failures"])
        std::cout << "    " << f.get<std::string>() << "\n";
    }
  } else if (type == "obstruction") {
    std::cout << j["group"].get<std::string>() << " p=" << j["p"]
              << ": central witness " << j["witness"].dump() << " ("
              << j["source"].get<std::string>() << ")\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int report(const Output &out, ql_status st, char *text) {
  std::string s = take(text);
  if (s.empty())
    return fail(st);
  if (out.json || !out.file.empty())
    out.emit(s);
  else
    print_summary(Json::parse(s));
  if (st != QL_OK && st != QL_REFUTED)
    std::cerr << "quillen-lab: " << ql_status_string(st) << ": "
              << ql_last_error() << "\n";
  return exit_code(st);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Admissible collections and the Quillen complex A_p(G)"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json, "Print the JSON report");
  app.add_option("-o,--output", out.file, "Write the JSON report to a file");
  int code = 0;

  // construct
  auto *construct = app.add_subcommand("construct", "Build a collection");
  std::string family;
  unsigned n = 0, p = 0;
  std::uint64_t q = 0;
  std::string kind;
  bool alternating = false, symmetric = false;
  construct
      ->add_option("family", family,
                   "sym-alt | a8 | linear | projective | sl42 | sl62 | "
                   "obstruction")
      ->required();
  construct->add_option("--n", n, "Degree or dimension");
  construct->add_option("--q", q, "Field order");
  construct->add_option("--p", p, "Prime");
  construct->add_option("--kind", kind, "GL | SL | PGL | PSL | GU | SU");
  construct->add_flag("--alternating", alternating, "Use Alt(n) (sym-alt)");
  construct->add_flag("--symmetric", symmetric, "Use Sym(8) (a8)");
  construct->callback([&] {
    if (family == "obstruction") {
      char *rep = nullptr;
      auto st = ql_obstruction(kind.empty() ? "GL" : kind.c_str(), n, q, p,
                               &rep);
      code = report(out, st, rep);
      return;
    }
    Json req{{"family", family}};
    if (n)
      req["n"] = n;
    if (q)
      req["q"] = q;
    if (p)
      req["p"] = p;
    if (!kind.empty())
      req["kind"] = kind;
    req["alternating"] = alternating;
    req["symmetric"] = symmetric;
    char *text = nullptr;
    auto st = ql_construct(req.dump().c_str(), nullptr, &text);
    if (st != QL_OK) {
      code = fail(st);
      return;
    }
    out.emit(take(text));
  });

  // verify / collection verify
  std::string input;
  auto verify_cb = [&] {
    ql_status st;
    ql_collection *c = open_collection(input, st);
    if (!c) {
      code = fail(st);
      return;
    }
    char *rep = nullptr;
    st = ql_verify(c, &rep);
    ql_collection_free(c);
    code = report(out, st, rep);
  };
  auto certify_cb = [&] {
    ql_status st;
    ql_collection *c = open_collection(input, st);
    if (!c) {
      code = fail(st);
      return;
    }
    char *rep = nullptr;
    st = ql_certify(c, &rep);
    ql_collection_free(c);
    code = report(out, st, rep);
  };
  auto *verify = app.add_subcommand("verify", "Admissibility report");
  verify->add_option("collection", input, "Collection JSON file or -")
      ->required();
  verify->callback(verify_cb);
  auto *certify = app.add_subcommand("certify", "Nonzero class certificate");
  certify->add_option("collection", input, "Collection JSON file or -")
      ->required();
  certify->callback(certify_cb);

  auto *collection = app.add_subcommand("collection", "Collection commands");
  collection->require_subcommand(1);
  auto *cverify = collection->add_subcommand("verify", "Admissibility report");
  cverify->add_option("collection", input, "Collection JSON file or -")
      ->required();
  cverify->callback(verify_cb);
  auto *cycle = app.add_subcommand("cycle", "Cycle commands");
  cycle->require_subcommand(1);
  auto *ccertify = cycle->add_subcommand("certify", "Nonzero class certificate");
  ccertify->add_option("collection", input, "Collection JSON file or -")
      ->required();
  ccertify->callback(certify_cb);

  // homology
  std::string group;
  auto *homology = app.add_subcommand("homology", "Reduced homology of A_p(G)");
  homology->add_option("--group", group, "Built-in name, JSON or spec file")
      ->required();
  homology->add_option("--p", p, "Prime")->required();
  homology->callback([&] {
    ql_status st;
    ql_group *g = open_group(group, st);
    if (!g) {
      code = fail(st);
      return;
    }
    char *rep = nullptr;
    st = ql_homology(g, p, &rep);
    ql_group_free(g);
    code = report(out, st, rep);
  });

  // search
  Json limits = Json::object();
  std::size_t max_results = 1;
  unsigned max_rank = 4;
  double budget = 0;
  std::uint64_t cap = 0;
  bool force = false, all = false, no_frames = false, conj = false;
  auto *search = app.add_subcommand("search", "Exhaustive admissible search");
  search->add_option("--group", group, "Built-in name, JSON or spec file")
      ->required();
  search->add_option("--p", p, "Prime")->required();
  search->add_option("--max-results", max_results, "Stop after this many");
  search->add_flag("--all", all, "Collect every collection");
  search->add_option("--max-rank", max_rank, "Skip larger maximal subgroups");
  search->add_option("--time-budget", budget, "Seconds; 0 for none");
  search->add_option("--cap", cap, "Enumeration cap");
  search->add_flag("--force", force, "Search even when obstructed");
  search->add_flag("--no-frame-reduction", no_frames,
                   "Try every ordered basis");
  search->add_flag("--conjugacy-reduction", conj,
                   "One maximal subgroup per conjugacy class");
  search->callback([&] {
    ql_status st;
    ql_group *g = open_group(group, st);
    if (!g) {
      code = fail(st);
      return;
    }
    limits = {{"max_results", max_results}, {"all", all},
              {"max_rank", max_rank},       {"time_budget", budget},
              {"force", force},             {"frame_reduction", !no_frames},
              {"conjugacy_reduction", conj}};
    if (cap)
      limits["cap"] = cap;
    char *rep = nullptr;
    st = ql_search(g, p, limits.dump().c_str(), &rep);
    ql_group_free(g);
    code = report(out, st, rep);
  });

  // paper-suite
  std::vector<int> only;
  int fault = 0;
  std::uint64_t seed = 0;
  auto *suite = app.add_subcommand("paper-suite", "Run every acceptance check");
  suite->add_option("--only", only, "Criterion ids")->delimiter(',');
  suite->add_option("--fault", fault, "Corrupt the fixture of one criterion");
  suite->add_option("--seed", seed, "Seed for randomized checks");
  suite->callback([&] {
    Json opts = Json::object();
    if (!only.empty())
      opts["only"] = only;
    if (fault)
      opts["fault"] = fault;
    if (seed)
      opts["seed"] = seed;
    char *rep = nullptr;
    auto st = ql_paper_suite(opts.dump().c_str(), &rep);
    code = report(out, st, rep);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception &e) {
    std::cerr << "quillen-lab: " << e.what() << "\n";
    return 2;
  }
  return code;
}
