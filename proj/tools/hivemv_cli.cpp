// Command-line front end.  Talks to the library exclusively through the C
// surface in hivemv.h; all structured data crosses as JSON strings.
//
// Exit codes: 0 success, 1 verification failure (counterexample JSON on
// stdout), 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hivemv.h"

using nlohmann::json;

namespace {

struct FreeDeleter {
  void operator()(char* p) const { hm_free(p); }
};
using CStr = std::unique_ptr<char, FreeDeleter>;

struct UsageError {
  std::string what;
};

std::vector<int64_t> parse_csv(const std::string& flag, const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int64_t v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.empty())
      throw UsageError{"--" + flag + ": '" + item + "' is not an integer"};
    out.push_back(v);
  }
  if (out.empty()) throw UsageError{"--" + flag + ": empty list"};
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError{"cannot open " + path};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string weight_str(const std::vector<int64_t>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::vector<int64_t> dual_weight(const std::vector<int64_t>& w) {
  std::vector<int64_t> d(w.rbegin(), w.rend());
  for (int64_t& v : d) v = -v;
  return d;
}

int fail_status(hm_status st) {
  std::cerr << "error: " << hm_last_error() << "\n";
  return (st == HM_EINVAL || st == HM_EPARSE) ? 2 : 1;
}

void print_hive_human(const json& h) {
  int n = h.at("n").get<int>();
  // Row j on its own line, i ascending.
  for (int j = n; j >= 0; --j) {
    std::cout << "  ";
    for (const json& p : h.at("values"))
      if (p.at("j").get<int>() == j) std::cout << p.at("v").get<int64_t>() << " ";
    std::cout << "\n";
  }
}

void print_bz_human(const json& m) {
  for (const json& e : m.at("M")) {
    std::cout << "  M{";
    const json& subset = e.at("subset");
    for (size_t i = 0; i < subset.size(); ++i)
      std::cout << (i ? "," : "") << subset[i].get<int>();
    std::cout << "} = " << e.at("v").get<int64_t>() << "\n";
  }
}

// Shared flag bundle; every subcommand picks what it needs.
struct Args {
  std::string la, mu, nu, chi;
  std::vector<std::string> weights;
  std::string input, p_file, q_file;
  std::vector<std::string> matrices;
  std::string subset, sizes, point;
  int n = 3;
  int count = 200;
  int n_max = 4;
  int64_t bound = 3;
  std::uint64_t seed = 20260815;
  bool seed_given = false;
  bool json_mode = false;
  bool reversed = false;
};

int run_hive_enumerate(const Args& a) {
  auto la = parse_csv("la", a.la), mu = parse_csv("mu", a.mu), nu = parse_csv("nu", a.nu);
  if (mu.size() != la.size() || nu.size() != la.size())
    throw UsageError{"coweight lengths differ"};
  char* out = nullptr;
  hm_status st = hm_hive_enumerate(la.data(), mu.data(), nu.data(),
                                   static_cast<int32_t>(la.size()), a.reversed ? 1 : 0, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
    return 0;
  }
  json hives = json::parse(out);
  std::cout << "boundary: la=" << weight_str(la) << " mu=" << weight_str(mu)
            << " nu=" << weight_str(nu) << " chi=nu^vee=" << weight_str(dual_weight(nu))
            << "\n";
  std::cout << hives.size() << " hive(s)\n";
  int idx = 0;
  for (const json& h : hives) {
    std::cout << "hive " << ++idx << ":\n";
    print_hive_human(h);
  }
  return 0;
}

int run_hive_check(const Args& a) {
  std::string text = slurp(a.input);
  char* out = nullptr;
  hm_status st = hm_hive_check(text.c_str(), a.reversed ? 1 : 0, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  json violations = json::parse(out);
  if (a.json_mode)
    std::cout << out << "\n";
  else if (violations.empty())
    std::cout << "valid hive\n";
  else
    for (const json& v : violations)
      std::cout << "type " << v.at("type").get<int>() << " at (" << v.at("i").get<int>() << ","
                << v.at("j").get<int>() << "," << v.at("k").get<int>() << "): "
                << v.at("lhs").get<int64_t>() << " > " << v.at("rhs").get<int64_t>() << "\n";
  return violations.empty() ? 0 : 1;
}

int run_lr_coeff(const Args& a) {
  auto la = parse_csv("la", a.la), mu = parse_csv("mu", a.mu), nu = parse_csv("nu", a.nu);
  if (mu.size() != la.size() || nu.size() != la.size())
    throw UsageError{"coweight lengths differ"};
  int64_t v = 0;
  hm_status st =
      hm_lr_coefficient(la.data(), mu.data(), nu.data(), static_cast<int32_t>(la.size()), &v);
  if (st != HM_OK) return fail_status(st);
  std::cout << v << "\n";
  return 0;
}

std::vector<int64_t> flatten_weights(const std::vector<std::string>& ws, int32_t* k,
                                     int32_t* n) {
  if (ws.size() < 2) throw UsageError{"need at least two --w coweights"};
  std::vector<int64_t> flat;
  size_t len = 0;
  for (const std::string& s : ws) {
    auto w = parse_csv("w", s);
    if (len == 0) len = w.size();
    if (w.size() != len) throw UsageError{"coweight lengths differ"};
    flat.insert(flat.end(), w.begin(), w.end());
  }
  *k = static_cast<int32_t>(ws.size());
  *n = static_cast<int32_t>(len);
  return flat;
}

int run_lr_multi(const Args& a) {
  int32_t k = 0, n = 0;
  auto flat = flatten_weights(a.weights, &k, &n);
  int64_t v = 0;
  hm_status st = hm_multi_invariant_dim(flat.data(), k, n, &v);
  if (st != HM_OK) return fail_status(st);
  std::cout << v << "\n";
  return 0;
}

int run_bz_enumerate(const Args& a) {
  auto la = parse_csv("la", a.la), mu = parse_csv("mu", a.mu), nu = parse_csv("nu", a.nu);
  if (mu.size() != la.size() || nu.size() != la.size())
    throw UsageError{"coweight lengths differ"};
  char* out = nullptr;
  hm_status st = hm_bz_enumerate(la.data(), mu.data(), nu.data(),
                                 static_cast<int32_t>(la.size()), &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
    return 0;
  }
  json data = json::parse(out);
  std::cout << data.size() << " datum/data\n";
  int idx = 0;
  for (const json& m : data) {
    std::cout << "datum " << ++idx << ":\n";
    print_bz_human(m);
  }
  return 0;
}

int run_bz_check(const Args& a) {
  std::string text = slurp(a.input);
  char* out = nullptr;
  hm_status st = hm_bz_check(text.c_str(), &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  json report = json::parse(out);
  bool pass = report.at("pass").get<bool>();
  if (a.json_mode)
    std::cout << out << "\n";
  else
    std::cout << (pass ? "valid datum" : "violations found") << "\n";
  if (!pass && !a.json_mode) std::cout << out << "\n";
  return pass ? 0 : 1;
}

int run_phi_forward(const Args& a) {
  std::string text = slurp(a.input);
  auto nu = parse_csv("nu", a.nu);
  char* out = nullptr;
  hm_status st =
      hm_phi_forward(text.c_str(), nu.data(), static_cast<int32_t>(nu.size()), &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
  } else {
    json h = json::parse(out);
    std::cout << "hive:\n";
    print_hive_human(h);
  }
  return 0;
}

int run_phi_inverse(const Args& a) {
  std::string text = slurp(a.input);
  char* out = nullptr;
  hm_status st = hm_phi_inverse(text.c_str(), a.seed_given ? 1 : 0, a.seed, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
  } else {
    json m = json::parse(out);
    print_bz_human(m);
  }
  return 0;
}

int run_phi_verify(const Args& a) {
  auto la = parse_csv("la", a.la), mu = parse_csv("mu", a.mu), nu = parse_csv("nu", a.nu);
  if (mu.size() != la.size() || nu.size() != la.size())
    throw UsageError{"coweight lengths differ"};
  char* out = nullptr;
  hm_status st =
      hm_phi_verify(la.data(), mu.data(), nu.data(), static_cast<int32_t>(la.size()), &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  json report = json::parse(out);
  bool pass = report.at("pass").get<bool>();
  if (a.json_mode)
    std::cout << out << "\n";
  else
    std::cout << (pass ? "bijection verified" : "FAILED: " + report.at("failure").get<std::string>())
              << " (" << report.at("mv_count").get<int64_t>() << " data, "
              << report.at("hive_count").get<int64_t>() << " hives)\n";
  if (!pass && !a.json_mode) std::cout << out << "\n";
  return pass ? 0 : 1;
}

int run_khive_enumerate(const Args& a) {
  int32_t k = 0, n = 0;
  auto flat = flatten_weights(a.weights, &k, &n);
  char* out = nullptr;
  hm_status st = hm_khive_enumerate(flat.data(), k, n, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
    return 0;
  }
  json hives = json::parse(out);
  std::cout << hives.size() << " tetrahedron/tetrahedra\n";
  int idx = 0;
  for (const json& f : hives) {
    std::cout << "tetrahedron " << ++idx << ":\n";
    for (const json& p : f.at("values")) {
      std::cout << "  (";
      const json& t = p.at("idx");
      for (size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i].get<int>();
      std::cout << ") = " << p.at("v").get<int64_t>() << "\n";
    }
  }
  return 0;
}

int run_khive_associate(const Args& a) {
  std::string p = slurp(a.p_file), q = slurp(a.q_file);
  char* out = nullptr;
  hm_status st = hm_khive_associate(p.c_str(), q.c_str(), &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  if (a.json_mode) {
    std::cout << out << "\n";
  } else {
    json r = json::parse(out);
    std::cout << "r:\n";
    print_hive_human(r.at("r"));
    std::cout << "s:\n";
    print_hive_human(r.at("s"));
  }
  return 0;
}

int run_eval_dgamma(const Args& a) {
  if (a.matrices.size() != 1) throw UsageError{"need exactly one --matrix"};
  std::string text = slurp(a.matrices[0]);
  std::vector<int32_t> subset;
  if (!a.subset.empty())
    for (int64_t v : parse_csv("subset", a.subset)) subset.push_back(static_cast<int32_t>(v));
  int64_t v = 0;
  hm_status st = hm_eval_dgamma(text.c_str(), subset.data(),
                                static_cast<int32_t>(subset.size()), &v);
  if (st != HM_OK) return fail_status(st);
  std::cout << v << "\n";
  return 0;
}

int run_eval_h(const Args& a) {
  if (a.matrices.empty()) throw UsageError{"need --matrix (repeatable)"};
  json arr = json::array();
  for (const std::string& path : a.matrices) arr.push_back(json::parse(slurp(path)));
  std::vector<int32_t> sizes;
  for (int64_t v : parse_csv("sizes", a.sizes)) sizes.push_back(static_cast<int32_t>(v));
  if (sizes.size() != a.matrices.size())
    throw UsageError{"--sizes length must match the matrix count"};
  int64_t v = 0;
  hm_status st = hm_eval_h(arr.dump().c_str(), sizes.data(),
                           static_cast<int32_t>(sizes.size()), &v);
  if (st != HM_OK) return fail_status(st);
  std::cout << v << "\n";
  return 0;
}

int run_eval_speyer(const Args& a) {
  if (a.matrices.size() != 3) throw UsageError{"need exactly three --matrix"};
  auto point = parse_csv("point", a.point);
  if (point.size() != 3) throw UsageError{"--point must have three entries"};
  std::string g1 = slurp(a.matrices[0]), g2 = slurp(a.matrices[1]), g3 = slurp(a.matrices[2]);
  int32_t finite = 0;
  int64_t v = 0;
  hm_status st = hm_eval_speyer(g1.c_str(), g2.c_str(), g3.c_str(),
                                static_cast<int32_t>(point[0]), static_cast<int32_t>(point[1]),
                                static_cast<int32_t>(point[2]), &finite, &v);
  if (st != HM_OK) return fail_status(st);
  if (finite)
    std::cout << v << "\n";
  else
    std::cout << "infinity\n";
  return 0;
}

int run_eval_plucker_sweep(const Args& a) {
  char* out = nullptr;
  hm_status st = hm_eval_plucker_sweep(a.n, a.count, a.seed, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  json report = json::parse(out);
  double rate = report.at("rate").get<double>();
  if (a.json_mode)
    std::cout << out << "\n";
  else
    std::cout << report.at("holding").get<int64_t>() << "/" << report.at("total").get<int64_t>()
              << " instances hold (rate " << rate << ")\n";
  if (rate < 0.99 && !a.json_mode) std::cout << out << "\n";
  return rate >= 0.99 ? 0 : 1;
}

int run_sweep_verify_all(const Args& a) {
  char* out = nullptr;
  hm_status st = hm_sweep_verify_all(a.n_max, a.bound, a.seed, &out);
  if (st != HM_OK) return fail_status(st);
  CStr guard(out);
  json report = json::parse(out);
  bool all = true;
  for (const json& r : report) all = all && r.at("pass").get<bool>();
  if (a.json_mode) {
    std::cout << out << "\n";
  } else {
    for (const json& r : report)
      std::cout << r.at("id").get<int>() << " " << (r.at("pass").get<bool>() ? "PASS" : "FAIL")
                << " " << r.at("name").get<std::string>() << " ["
                << r.at("details").get<std::string>() << "]\n";
    if (!all) std::cout << out << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hive / crystal combinatorics workbench"};
  app.require_subcommand(1);
  Args a;

  auto add_triple = [&](CLI::App* cmd) {
    cmd->add_option("--la", a.la)->required();
    cmd->add_option("--mu", a.mu)->required();
    cmd->add_option("--nu", a.nu)->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", a.json_mode); };

  int (*action)(const Args&) = nullptr;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Args&)) {
    cmd->callback([&action, fn] { action = fn; });
  };

  CLI::App* hive = app.add_subcommand("hive", "triangular arrays");
  hive->require_subcommand(1);
  CLI::App* he = hive->add_subcommand("enumerate", "all hives with a boundary triple");
  add_triple(he);
  add_json(he);
  he->add_flag("--reversed", a.reversed, "flip every rhombus inequality");
  bind(he, run_hive_enumerate);
  CLI::App* hc = hive->add_subcommand("check", "rhombus violations of a hive JSON file");
  hc->add_option("--input", a.input)->required();
  add_json(hc);
  hc->add_flag("--reversed", a.reversed);
  bind(hc, run_hive_check);

  CLI::App* lr = app.add_subcommand("lr", "tableau oracles");
  lr->require_subcommand(1);
  CLI::App* lc = lr->add_subcommand("coeff", "Littlewood-Richardson coefficient");
  add_triple(lc);
  bind(lc, run_lr_coeff);
  CLI::App* lm = lr->add_subcommand("multi", "invariant dimension of a weight list");
  lm->add_option("--w", a.weights, "coweight, repeatable")->required();
  bind(lm, run_lr_multi);

  CLI::App* bz = app.add_subcommand("bz", "subset tables");
  bz->require_subcommand(1);
  CLI::App* be = bz->add_subcommand("enumerate", "all tables with a boundary triple");
  add_triple(be);
  add_json(be);
  bind(be, run_bz_enumerate);
  CLI::App* bc = bz->add_subcommand("check", "defining conditions of a table JSON file");
  bc->add_option("--input", a.input)->required();
  add_json(bc);
  bind(bc, run_bz_check);

  CLI::App* phi = app.add_subcommand("phi", "hive <-> table translation");
  phi->require_subcommand(1);
  CLI::App* pf = phi->add_subcommand("forward", "table JSON -> hive");
  pf->add_option("--input", a.input)->required();
  pf->add_option("--nu", a.nu)->required();
  add_json(pf);
  bind(pf, run_phi_forward);
  CLI::App* pi = phi->add_subcommand("inverse", "hive JSON -> table");
  pi->add_option("--input", a.input)->required();
  pi->add_option("--seed", a.seed)->each([&](const std::string&) { a.seed_given = true; });
  add_json(pi);
  bind(pi, run_phi_inverse);
  CLI::App* pv = phi->add_subcommand("verify", "bijection report for a boundary triple");
  add_triple(pv);
  add_json(pv);
  bind(pv, run_phi_verify);

  CLI::App* kh = app.add_subcommand("khive", "multi-axis tetrahedra");
  kh->require_subcommand(1);
  CLI::App* ke = kh->add_subcommand("enumerate", "all tetrahedra with a boundary list");
  ke->add_option("--w", a.weights, "coweight, repeatable")->required();
  add_json(ke);
  bind(ke, run_khive_enumerate);
  CLI::App* ka = kh->add_subcommand("associate", "complete two faces and read the far pair");
  ka->add_option("--p", a.p_file)->required();
  ka->add_option("--q", a.q_file)->required();
  add_json(ka);
  bind(ka, run_khive_associate);

  CLI::App* ev = app.add_subcommand("eval", "valuation evaluators");
  ev->require_subcommand(1);
  CLI::App* ed = ev->add_subcommand("dgamma", "subset minor valuation");
  ed->add_option("--matrix", a.matrices)->required();
  ed->add_option("--subset", a.subset, "1-based elements, comma separated");
  bind(ed, run_eval_dgamma);
  CLI::App* eh = ev->add_subcommand("h", "tuple valuation");
  eh->add_option("--matrix", a.matrices, "matrix JSON file, repeatable")->required();
  eh->add_option("--sizes", a.sizes)->required();
  bind(eh, run_eval_h);
  CLI::App* es = ev->add_subcommand("speyer", "trinomial coefficient valuation");
  es->add_option("--matrix", a.matrices, "matrix JSON file, three times")->required();
  es->add_option("--point", a.point, "i,j,k with i+j+k = n")->required();
  bind(es, run_eval_speyer);
  CLI::App* ep = ev->add_subcommand("plucker-sweep", "exchange relation rate on random matrices");
  ep->add_option("--n", a.n);
  ep->add_option("--count", a.count);
  ep->add_option("--seed", a.seed);
  add_json(ep);
  bind(ep, run_eval_plucker_sweep);

  CLI::App* sw = app.add_subcommand("sweep", "batch verification");
  sw->require_subcommand(1);
  CLI::App* sv = sw->add_subcommand("verify-all", "run all nine verification criteria");
  sv->add_option("--n-max", a.n_max);
  sv->add_option("--bound", a.bound);
  sv->add_option("--seed", a.seed);
  add_json(sv);
  bind(sv, run_sweep_verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action(a) : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what << "\n";
    return 2;
  }
}
