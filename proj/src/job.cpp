#include "treecount/job.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "treecount/admissible.hpp"
#include "treecount/enumerate.hpp"
#include "treecount/error.hpp"
#include "treecount/graph6.hpp"
#include "treecount/groupoid.hpp"
#include "treecount/matching.hpp"

namespace treecount {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<Phi> parse_phi_word(std::string_view word) {
  if (word == "generic") return Phi::Generic;
  if (word == "versal") return Phi::Versal;
  return std::nullopt;
}

}  // namespace

PhiSpec phi_spec_parse(std::string_view text) {
  PhiSpec spec;
  const std::string whole = trim(text);
  if (whole.empty()) return spec;
  if (auto p = parse_phi_word(whole)) {
    spec.uniform = p;
    return spec;
  }
  std::stringstream items(whole);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("phi entry '" + item + "' is not of the form k=generic|versal");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    int k = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (key.empty() || ec != std::errc() || ptr != key.data() + key.size() || k < 0)
      throw ParseError("phi component key '" + key + "' is not a vertex number");
    const auto phi = parse_phi_word(value);
    if (!phi) throw ParseError("phi value '" + value + "' is neither generic nor versal");
    for (auto& [existing, ignored] : spec.per_component)
      if (existing == k) throw ParseError("phi component " + key + " given twice");
    spec.per_component.emplace_back(k, *phi);
  }
  return spec;
}

PhiAssignment resolve_phi(const PhiSpec& spec, const RedGreenPartition& p, int label_offset) {
  if (spec.uniform) return uniform_phi(p, *spec.uniform);
  if (spec.empty()) {
    if (p.size() > 0) throw DomainError("tree has red-green components; a phi choice is required");
    return {};
  }
  if (p.size() == 0) throw DomainError("orange tree has no red-green components to assign");
  PhiAssignment out(p.size());
  std::vector<char> assigned(p.size(), 0);
  for (auto [key, phi] : spec.per_component) {
    std::size_t found = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.components[i].vertices.front() + label_offset == key) found = i;
    if (found == p.size())
      throw DomainError("no red-green component has smallest vertex " + std::to_string(key));
    out[found] = phi;
    assigned[found] = 1;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!assigned[i])
      throw DomainError("phi missing for the component with smallest vertex " +
                        std::to_string(p.components[i].vertices.front() + label_offset));
  return out;
}

std::optional<Command> parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> names = {
      {"color", Command::Color},   {"sets", Command::Sets},     {"normalize", Command::Normalize},
      {"count", Command::Count},   {"oracle", Command::Oracle}, {"verify", Command::Verify},
      {"census", Command::Census},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Color: return "color";
    case Command::Sets: return "sets";
    case Command::Normalize: return "normalize";
    case Command::Count: return "count";
    case Command::Oracle: return "oracle";
    case Command::Verify: return "verify";
    case Command::Census: return "census";
  }
  return "?";
}

namespace {

struct LoadedTree {
  Tree tree;
  int offset = 0;
};

LoadedTree load_tree(const TreeInput& in) {
  const int sources = (in.graph6 ? 1 : 0) + (in.edge_file ? 1 : 0) + (in.family ? 1 : 0);
  if (sources != 1) throw ParseError("exactly one of --graph6, --edges, --family is required");
  if (in.graph6) return {parse_graph6_tree(*in.graph6), 0};
  if (in.edge_file) {
    EdgeListInput parsed;
    if (*in.edge_file == "-") {
      parsed = parse_edge_list(std::cin, in.edge_base);
    } else {
      std::ifstream file(*in.edge_file);
      if (!file) throw ParseError("cannot open edge list " + *in.edge_file);
      parsed = parse_edge_list(file, in.edge_base);
    }
    return {std::move(parsed.tree), parsed.base};
  }
  const int n = in.family_n;
  switch (*in.family) {
    case 'A':
      if (n < 1) throw ParseError("family A needs --n >= 1");
      return {path_tree(n), 1};
    case 'D':
      if (n < 4) throw ParseError("family D needs --n >= 4");
      return {family_D(n), 1};
    case 'E':
      if (n < 5) throw ParseError("family E needs --n >= 5");
      return {family_E(n), 1};
    default:
      throw ParseError(std::string("unknown family '") + *in.family + "', expected A, D or E");
  }
}

int default_size_limit(Command c) {
  switch (c) {
    case Command::Sets: return kMaxIndependentSetSize;
    case Command::Oracle: return kMaxOracleSize;
    case Command::Verify: return 12;
    case Command::Count: return 40;
    default: return 62;
  }
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json coeffs_json(const Polynomial& p) {
  json out = json::array();
  for (const BigInt& c : p.coeffs()) out.push_back(big_json(c));
  return out;
}

std::string color_name(Color c) {
  std::string s(to_string(c));
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string_view kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::Orange: return "orange";
    case TreeKind::Unimodal: return "unimodal";
    case TreeKind::Other: return "other";
  }
  return "?";
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string phi_text(const PhiAssignment& phi, const RedGreenPartition& p, int offset) {
  if (phi.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!out.empty()) out += ",";
    out += std::to_string(p.components[i].vertices.front() + offset) + "=" + std::string(to_string(phi[i]));
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const JobSpec& job) : job_(job) {}

  JobReport operator()() {
    report_.json["command"] = std::string(to_string(job_.command));
    if (job_.command == Command::Census) {
      census_job();
    } else if (job_.command == Command::Verify && !job_.input.present()) {
      verify_all();
    } else {
      loaded_ = load_tree(job_.input);
      const int limit = job_.max_n.value_or(default_size_limit(job_.command));
      if (tree().size() > limit)
        throw GuardError("tree has " + std::to_string(tree().size()) + " vertices, limit is " +
                         std::to_string(limit) + " (--max-n)");
      coloring_ = canonical_coloring(tree());
      partition_ = red_green_components(tree(), coloring_);
      report_.json["tree"] = {{"n", tree().size()},
                              {"graph6", tree().size() <= 62 ? emit_graph6(tree()) : std::string()},
                              {"label_offset", offset()}};
      switch (job_.command) {
        case Command::Color: color(); break;
        case Command::Sets: sets(); break;
        case Command::Normalize: normalize(); break;
        case Command::Count: count(); break;
        case Command::Oracle: oracle(); break;
        case Command::Verify: verify_one(); break;
        case Command::Census: break;
      }
    }
    report_.text = text_.str();
    return std::move(report_);
  }

 private:
  const Tree& tree() const { return loaded_.tree; }
  int offset() const { return loaded_.offset; }
  int label(Vertex v) const { return v + offset(); }

  json labels(std::span<const Vertex> vs) const {
    json out = json::array();
    for (Vertex v : vs) out.push_back(label(v));
    return out;
  }

  std::string edge_text(const Edge& e) const { return std::to_string(label(e.u)) + "-" + std::to_string(label(e.v)); }

  PhiAssignment phi_or(const char* fallback) const {
    return resolve_phi(phi_spec_parse(job_.phi.value_or(fallback)), partition_, offset());
  }

  void color() {
    json colors = json::array();
    for (Vertex v = 0; v < tree().size(); ++v) {
      colors.push_back(std::string(to_string(coloring_.color[v])));
      text_ << "vertex " << label(v) << ": " << color_name(coloring_.color[v]) << "\n";
    }
    json dominoes = json::array();
    std::string domino_line;
    for (const Edge& e : coloring_.orange_dominoes) {
      dominoes.push_back({label(e.u), label(e.v)});
      domino_line += (domino_line.empty() ? "" : ", ") + edge_text(e);
    }
    json comps = json::array();
    for (const RedGreenComponent& c : partition_.components) {
      comps.push_back({{"handle", label(c.vertices.front())},
                       {"vertices", labels(c.vertices)},
                       {"reds", labels(c.reds)},
                       {"greens", labels(c.greens)},
                       {"dimension", c.dimension()}});
      text_ << "component " << label(c.vertices.front()) << ": " << c.vertices.size() << " vertices, dimension "
            << c.dimension() << "\n";
    }
    const TreeClass cls = classify(tree());
    if (!domino_line.empty()) text_ << "orange dominoes: " << domino_line << "\n";
    text_ << "dimension: " << cls.dimension << " (" << kind_name(cls.kind) << ")\n";
    report_.json["colors"] = colors;
    report_.json["orange_dominoes"] = dominoes;
    report_.json["components"] = comps;
    report_.json["dimension"] = cls.dimension;
    report_.json["class"] = std::string(kind_name(cls.kind));
  }

  void sets() {
    const bool all = !job_.matchings && !job_.independent && !job_.admissible;
    if (all || job_.matchings) {
      const auto ms = all_maximum_matchings(tree());
      json list = json::array();
      text_ << "maximum matchings: " << ms.size() << "\n";
      for (const Matching& m : ms) {
        json edges = json::array();
        std::string line;
        for (const Edge& e : m) {
          edges.push_back({label(e.u), label(e.v)});
          line += (line.empty() ? "" : " ") + edge_text(e);
        }
        if (!job_.count_only) {
          list.push_back(edges);
          text_ << "  {" << line << "}\n";
        }
      }
      report_.json["maximum_matchings"] = {{"count", ms.size()}};
      if (!job_.count_only) report_.json["maximum_matchings"]["sets"] = list;
    }
    if (all || job_.independent) {
      std::uint64_t total = 0;
      json list = json::array();
      for_each_independent_set(tree(), [&](std::span<const Vertex> s) {
        ++total;
        if (job_.count_only) return;
        list.push_back(labels(s));
      });
      text_ << "independent sets: " << total << "\n";
      if (!job_.count_only)
        for (const json& s : list) text_ << "  " << s.dump() << "\n";
      report_.json["independent_sets"] = {{"count", total},
                                          {"maximum_count", big_json(count_maximum_independent_sets(tree()))}};
      if (!job_.count_only) report_.json["independent_sets"]["sets"] = list;
    }
    if (all || job_.admissible) {
      json comps = json::array();
      for (const RedGreenComponent& c : partition_.components) {
        const auto found = admissible_sets(tree(), c);
        json list = json::array();
        text_ << "admissible sets of component " << label(c.vertices.front()) << ": " << found.size() << "\n";
        for (const AdmissibleSet& a : found) {
          json members = json::array();
          std::string line;
          for (std::size_t i = 0; i < a.members.size(); ++i) {
            members.push_back({{"vertex", label(a.members[i])}, {"sign", a.signs[i]}});
            line += (line.empty() ? "" : " ") + std::string(a.signs[i] > 0 ? "+" : "-") +
                    std::to_string(label(a.members[i]));
          }
          if (!job_.count_only) {
            list.push_back(members);
            text_ << "  " << line << "\n";
          }
        }
        json entry = {{"handle", label(c.vertices.front())}, {"count", found.size()}};
        if (!job_.count_only) entry["sets"] = list;
        comps.push_back(entry);
      }
      report_.json["admissible_sets"] = comps;
    }
  }

  void normalize() {
    const Matching m = maximum_matching(tree());
    const CoefficientState s =
        normalize_to_matching(CoefficientState::symbolic(tree().size()), tree(), coloring_, m, job_.seed);
    json table = json::object();
    std::string matching_line;
    for (const Edge& e : m) matching_line += (matching_line.empty() ? "" : ", ") + edge_text(e);
    text_ << "matching: " << (matching_line.empty() ? "-" : matching_line) << "\n";
    for (Vertex v = 0; v < tree().size(); ++v) {
      json exps = json::object();
      for (auto [sym, e] : s.coeff[v]) exps["a" + std::to_string(label(sym))] = e;
      table[std::to_string(label(v))] = exps;
      if (!s.coeff[v].empty()) text_ << "vertex " << label(v) << ": " << monomial_string(s.coeff[v], offset()) << "\n";
    }
    if (s.support().empty()) text_ << "all coefficients trivial\n";
    json edges = json::array();
    for (const Edge& e : m) edges.push_back({label(e.u), label(e.v)});
    report_.json["matching"] = edges;
    report_.json["coefficients"] = table;
    report_.json["support"] = labels(s.support());
  }

  void count() {
    const PhiAssignment phi = phi_or("generic");
    const Polynomial p = count_polynomial(tree(), phi, {nullptr, job_.seed});
    const RankProfile r = rank_profile(partition_, phi);
    report_.json["phi"] = phi_text(phi, partition_, offset());
    report_.json["coeffs"] = coeffs_json(p);
    report_.json["degree"] = p.degree();
    report_.json["rank"] = r.rank;
    report_.json["versal_rank"] = r.versal_rank;
    report_.json["polynomial"] = p.to_string();
    report_.json["factored"] = factored_string(p);
    switch (job_.format) {
      case OutputFormat::Pretty: text_ << p.to_string() << "\n"; break;
      case OutputFormat::Factored: text_ << factored_string(p) << "\n"; break;
      case OutputFormat::Json:
        text_ << json{{"coeffs", coeffs_json(p)}, {"degree", p.degree()}, {"rank", r.rank}}.dump() << "\n";
        break;
    }
  }

  OracleOptions oracle_options() const { return {job_.engine, job_.force}; }

  void oracle() {
    const PhiAssignment phi = phi_or("generic");
    const FqContext ctx(job_.q);
    const PointCount pc = count_points(tree(), phi, ctx, oracle_options());
    report_.json["phi"] = phi_text(phi, partition_, offset());
    report_.json["q"] = job_.q;
    report_.json["engine"] = job_.engine == OracleEngine::Transfer ? "transfer" : "brute-force";
    report_.json["no_generic_parameters"] = pc.no_generic_parameters();
    report_.json["count"] = pc.value ? big_json(*pc.value) : json(nullptr);
    report_.json["generic_tuples"] = pc.generic_tuples;
    report_.json["passing_tuples"] = pc.passing_tuples;
    if (pc.value) {
      text_ << pc.value->str() << "\n";
    } else {
      text_ << "no generic parameters over F_" << job_.q << "\n";
    }
  }

  json verify_case(const Tree& t, const RedGreenPartition& p, const PhiAssignment& phi, int off, bool& pass,
                   std::size_t& skipped, std::size_t& checks) {
    const VerificationReport r = verify_polynomial(t, phi, job_.primes, oracle_options());
    json list = json::array();
    for (const PrimeCheck& c : r.checks) {
      list.push_back({{"q", c.q},
                      {"expected", big_json(c.expected)},
                      {"observed", c.observed ? big_json(*c.observed) : json(nullptr)},
                      {"pass", c.pass()}});
      ++checks;
      if (!c.pass())
        text_ << "MISMATCH " << emit_graph6(t) << " phi " << phi_text(phi, p, off) << " q=" << c.q << ": expected "
              << c.expected.str() << ", observed " << c.observed->str() << "\n";
    }
    pass = pass && r.pass();
    skipped += r.skipped();
    return {{"graph6", emit_graph6(t)},
            {"phi", phi_text(phi, p, off)},
            {"polynomial", r.polynomial.to_string()},
            {"pass", r.pass()},
            {"checks", list}};
  }

  void finish_verify(json cases, bool pass, std::size_t skipped, std::size_t checks) {
    json primes = json::array();
    for (auto q : job_.primes) primes.push_back(q);
    report_.json["primes"] = primes;
    report_.json["cases"] = std::move(cases);
    report_.json["pass"] = pass;
    report_.json["skipped"] = skipped;
    report_.json["checks"] = checks;
    text_ << (pass ? "PASS" : "FAIL") << ": " << report_.json["cases"].size() << " cases, " << checks << " checks, "
          << skipped << " skipped\n";
    if (!pass) report_.exit_code = kExitMismatch;
  }

  void verify_one() {
    const std::vector<PhiAssignment> phis =
        job_.phi ? std::vector<PhiAssignment>{phi_or("")} : all_phi_assignments(partition_.size());
    json cases = json::array();
    bool pass = true;
    std::size_t skipped = 0, checks = 0;
    for (const PhiAssignment& phi : phis)
      cases.push_back(verify_case(tree(), partition_, phi, offset(), pass, skipped, checks));
    finish_verify(std::move(cases), pass, skipped, checks);
  }

  void verify_all() {
    const int max_n = job_.max_n.value_or(7);
    if (max_n < 1 || max_n > 12) throw GuardError("verify over all trees limited to --max-n <= 12");
    json cases = json::array();
    bool pass = true;
    std::size_t skipped = 0, checks = 0;
    for (int n = 1; n <= max_n; ++n)
      for (const Tree& t : enumerate_free_trees(n)) {
        const RedGreenPartition p = red_green_components(t, canonical_coloring(t));
        const std::vector<PhiAssignment> phis =
            job_.phi ? std::vector<PhiAssignment>{resolve_phi(phi_spec_parse(*job_.phi), p, 0)}
                     : all_phi_assignments(p.size());
        for (const PhiAssignment& phi : phis) cases.push_back(verify_case(t, p, phi, 0, pass, skipped, checks));
      }
    report_.json["max_n"] = max_n;
    finish_verify(std::move(cases), pass, skipped, checks);
  }

  void census_job() {
    const CensusResult r = census(job_.census_n, job_.census_class, job_.parallelism);
    json groups = json::array();
    text_ << "n=" << r.n << " " << to_string(r.cls) << ": " << r.tree_count() << " trees, " << r.distinct_polynomials
          << " distinct polynomials\n";
    for (const auto& group : r.collisions) {
      json members = json::array();
      std::string line;
      for (std::size_t i : group) {
        members.push_back(r.entries[i].graph6);
        line += (line.empty() ? "" : " ") + r.entries[i].graph6;
      }
      const Polynomial& p = r.entries[group.front()].polynomial;
      groups.push_back({{"graph6", members}, {"polynomial", p.to_string()}});
      if (job_.list_collisions) text_ << "  " << line << ": " << p.to_string() << "\n";
    }
    report_.json["n"] = r.n;
    report_.json["class"] = std::string(to_string(r.cls));
    report_.json["tree_count"] = r.tree_count();
    report_.json["distinct_polynomial_count"] = r.distinct_polynomials;
    report_.json["colliding_classes"] = groups;
  }

  const JobSpec& job_;
  JobReport report_;
  std::ostringstream text_;
  LoadedTree loaded_;
  Coloring coloring_;
  RedGreenPartition partition_;
};

}  // namespace

JobReport run(const JobSpec& job) {
  JobReport report;
  auto fail = [&](int code, const char* kind, const std::exception& e) {
    report = JobReport{};
    report.exit_code = code;
    report.json["command"] = std::string(to_string(job.command));
    report.json["error"] = {{"kind", kind}, {"message", e.what()}};
    report.text = std::string(kind) + " error: " + e.what() + "\n";
  };
  try {
    report = Runner(job)();
  } catch (const ParseError& e) {
    fail(kExitParse, "parse", e);
  } catch (const DomainError& e) {
    fail(kExitParse, "argument", e);
  } catch (const GuardError& e) {
    fail(kExitGuard, "guard", e);
  } catch (const InvariantError& e) {
    fail(kExitInvariant, "invariant", e);
  }
  report.json["exit_code"] = report.exit_code;
  report.json["generated_at"] = timestamp();
  return report;
}

}  // namespace treecount
