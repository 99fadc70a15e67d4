// Command-line front end: capacity tables, strategies, matrices, simulations,
// adversaries, the exact oracle, the codec and the acceptance checks.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twosided/adaptive.hpp"
#include "twosided/adversary.hpp"
#include "twosided/codec.hpp"
#include "twosided/errors.hpp"
#include "twosided/nonadaptive.hpp"
#include "twosided/oracle.hpp"
#include "twosided/verify.hpp"

using namespace twosided;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

enum class Format { Human, Jsonl, Csv };

// Single writer for all records of a run.
class Emitter {
 public:
  explicit Emitter(Format f) : format_(f) {}

  void record(const json& j, const std::string& human) {
    switch (format_) {
      case Format::Jsonl:
        std::cout << j.dump() << '\n';
        break;
      case Format::Csv: {
        std::string keys;
        std::string values;
        for (const auto& [k, v] : j.items()) {
          keys += (keys.empty() ? "" : ",") + k;
          values += (values.empty() ? "" : ",") + csv_cell(v);
        }
        if (keys != header_) {
          std::cout << keys << '\n';
          header_ = keys;
        }
        std::cout << values << '\n';
        break;
      }
      case Format::Human:
        std::cout << human << '\n';
        break;
    }
  }
  Format format() const { return format_; }

 private:
  static std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    }
    return s;
  }

  Format format_;
  std::string header_;
};

struct Common {
  std::string topology = "path";
  std::int64_t n_vertices = 0;
  int k = 1;
  std::int64_t s = 0;
  bool frozen = false;

  SearchSpace space() const {
    SearchSpace sp{parse_topology(topology), n_vertices, k, !frozen};
    sp.validate();
    return sp;
  }
};

// "a..b" or "a".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    const std::int64_t lo = std::stoll(text.substr(0, dots));
    const std::int64_t hi = std::stoll(text.substr(dots + 2));
    if (hi < lo) throw DomainError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError("bad range '" + text + "' (expected a or a..b)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative output paths land in $TWOSIDED_OUTPUT_DIR when it is set.
void write_output(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("TWOSIDED_OUTPUT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      p = std::filesystem::path(dir) / p;
    }
  }
  std::ofstream out(p);
  if (!out) throw DomainError("cannot write '" + p.string() + "'");
  out << text;
}

void add_space_options(CLI::App* cmd, Common& c, bool need_s) {
  cmd->add_option("--topology", c.topology, "path, cycle, open or half-open")->capture_default_str();
  cmd->add_option("--N", c.n_vertices, "number of vertices")->required();
  cmd->add_option("--k", c.k, "target speed")->capture_default_str();
  auto* s = cmd->add_option("--s", c.s, "accuracy");
  if (need_s) s->required();
  cmd->add_flag("--frozen", c.frozen, "target does not move after the last test");
}

json space_json(const SearchSpace& sp) {
  return json{{"topology", std::string(to_string(sp.topology))},
              {"N", sp.num_vertices},
              {"k", sp.speed},
              {"moves_after_last_test", sp.moves_after_last_test}};
}

// ---------------------------------------------------------------------------

struct TableOpts {
  std::string topology = "path";
  int k = 1;
  std::int64_t s = 0;
  std::string n_range = "0..4";
  bool s_star = false;
  bool nonadaptive = false;
  std::string n_vertices_range = "1..12";
  bool oracle = false;
};

int cmd_table(const TableOpts& o, Emitter& out) {
  const Topology topo = parse_topology(o.topology);
  if (o.s_star) {
    const auto [lo, hi] = parse_range(o.n_vertices_range);
    for (std::int64_t n = std::max<std::int64_t>(lo, 1); n <= hi; ++n) {
      std::int64_t value = 0;
      std::string source;
      if (o.nonadaptive) {
        if (topo != Topology::Path) throw DomainError("non-adaptive thresholds are known for paths only");
        value = nonadaptive_min_accuracy(n, o.k);
        source = "nonadaptive-threshold";
      } else if (topo == Topology::Path) {
        value = path_min_accuracy(n, o.k);
        source = "path-threshold";
      } else if (topo == Topology::Cycle) {
        value = cycle_min_accuracy(n, o.k);
        source = "cycle-threshold";
      } else {
        throw DomainError("s* tables are for paths and cycles");
      }
      json j{{"topology", o.topology}, {"N", n}, {"k", o.k}, {"s_star", value}, {"source", source}};
      std::string human = o.topology + " N=" + std::to_string(n) + " k=" + std::to_string(o.k) +
                          " s*=" + std::to_string(value) + " [" + source + "]";
      if (o.oracle && !o.nonadaptive && n <= 9) {
        const SearchSpace sp{topo, n, o.k, true};
        const std::int64_t got = exact_min_accuracy(sp, std::nullopt, TestClass::AllSubsets);
        j["oracle"] = got;
        human += " oracle=" + std::to_string(got) + (got == value ? "" : " MISMATCH");
      }
      out.record(j, human);
    }
    return kExitOk;
  }
  const auto [lo, hi] = parse_range(o.n_range);
  for (std::int64_t n = std::max<std::int64_t>(lo, 0); n <= hi; ++n) {
    json j{{"topology", o.topology}, {"n", n}, {"s", o.s}, {"k", o.k}};
    std::string human = o.topology + " n=" + std::to_string(n) + " s=" + std::to_string(o.s) +
                        " k=" + std::to_string(o.k);
    try {
      std::int64_t cap = 0;
      std::string source;
      switch (topo) {
        case Topology::Path: cap = path_capacity(static_cast<int>(n), o.s, o.k); source = "path-capacity"; break;
        case Topology::Cycle: cap = cycle_capacity(static_cast<int>(n), o.s, o.k); source = "cycle-capacity"; break;
        case Topology::OpenSegment: cap = open_capacity(static_cast<int>(n), o.s, o.k); source = "open-capacity"; break;
        case Topology::HalfOpenSegment:
          cap = half_open_capacity(static_cast<int>(n), o.s, o.k);
          source = "half-open-capacity";
          break;
      }
      j["N"] = cap;
      j["source"] = source;
      human += " N=" + std::to_string(cap) + " [" + source + "]";
    } catch (const DomainError& e) {
      j["N"] = nullptr;
      j["error"] = e.what();
      human += " error: " + std::string(e.what());
    }
    out.record(j, human);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct StrategyOpts {
  Common c;
  std::string kind = "auto";
  int l = 1;
  int budget = -1;
  std::string out_file;
};

AdaptiveStrategy build_strategy(const StrategyOpts& o) {
  const SearchSpace sp = o.c.space();
  std::string kind = o.kind;
  if (kind == "auto") {
    if (sp.topology == Topology::Cycle) {
      kind = "halving";
    } else if (sp.topology == Topology::Path && o.c.s < 4 * o.c.k) {
      kind = "sliding";
    } else {
      kind = "segment";
    }
  }
  if (kind == "halving") {
    if (sp.topology != Topology::Cycle) throw DomainError("halving strategy is for cycles");
    return cycle_strategy(sp.num_vertices, o.c.s, o.c.k);
  }
  if (kind == "segment") return segment_strategy(sp, o.c.s);
  if (sp.topology != Topology::Path) throw DomainError(kind + " strategy is for paths");
  if (kind == "shifting") return path_shifting_strategy(sp.num_vertices, o.c.k);
  if (kind == "sliding") {
    const int l = o.c.s > 0 ? static_cast<int>(o.c.s - 3 * o.c.k) : o.l;
    return path_sliding_window_strategy(sp.num_vertices, o.c.k, l,
                                        o.budget >= 0 ? std::optional<int>(o.budget) : std::nullopt);
  }
  throw DomainError("unknown strategy kind '" + kind + "'");
}

int cmd_strategy(const StrategyOpts& o, Emitter& out) {
  const AdaptiveStrategy st = build_strategy(o);
  const StrategyCheck chk = check_strategy(st, st.accuracy());
  const std::string text = st.serialize();
  if (!o.out_file.empty()) write_output(o.out_file, text);
  json j = space_json(st.space());
  j["s"] = st.accuracy();
  j["depth"] = chk.depth;
  j["nodes"] = st.size();
  j["successful"] = chk.successful && chk.leaves_match;
  j["worst_leaf"] = chk.worst_size;
  if (o.out_file.empty()) j["tree"] = text;
  std::string human = (o.out_file.empty() ? text : "") + "# depth=" + std::to_string(chk.depth) +
                      " nodes=" + std::to_string(st.size()) + " worst_leaf=" + std::to_string(chk.worst_size) +
                      (chk.successful ? " successful" : " NOT successful");
  out.record(j, human);
  return chk.successful && chk.leaves_match ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct MatrixOpts {
  std::int64_t n_vertices = 0;
  int k = 1;
  std::string matrix_file;
  std::int64_t evaluate = -1;
  bool drop_last = false;
  std::string out_file;
};

TestMatrix load_or_build_matrix(const std::string& file, std::int64_t n, int k) {
  if (!file.empty()) return TestMatrix::parse(read_file(file));
  return k == 1 ? expanding_accuracy_matrix(n) : general_k_matrix(n, k);
}

int cmd_matrix(const MatrixOpts& o, Emitter& out) {
  TestMatrix m = load_or_build_matrix(o.matrix_file, o.n_vertices, o.k);
  if (o.drop_last) m = m.without_last_row();
  if (!o.out_file.empty()) write_output(o.out_file, m.to_text());
  json j{{"N", m.cols()}, {"k", o.k}, {"rows", m.rows()}};
  std::string human = o.out_file.empty() ? m.to_text() : "";
  human += "# rows=" + std::to_string(m.rows());
  int code = kExitOk;
  if (o.out_file.empty()) j["matrix"] = m.to_text();
  if (o.evaluate >= 0) {
    const MatrixEvaluation ev = evaluate_matrix(SearchSpace::path(m.cols(), o.k), m, o.evaluate);
    j["s"] = o.evaluate;
    j["success"] = ev.success;
    j["achieved_accuracy"] = ev.achieved_accuracy;
    j["worst_answers"] = bits_to_string(ev.worst_answers);
    j["worst_final"] = ev.worst_final.to_string();
    human += " s=" + std::to_string(o.evaluate) + (ev.success ? " success" : " FAILURE") +
             " achieved=" + std::to_string(ev.achieved_accuracy) + " worst_answers=" +
             bits_to_string(ev.worst_answers) + " worst_final=" + ev.worst_final.to_string();
    if (!ev.success) code = kExitFailed;
  }
  out.record(j, human);
  return code;
}

// ---------------------------------------------------------------------------

struct SessionOpts {
  Common c;
  std::string walk;
  std::string source = "fixed";
  std::uint64_t seed = 1;
  std::string matrix_file;
  bool adaptive = false;
  std::string decode_bits;
  int runs = 1;
};

CodecStrategy session_strategy(const SessionOpts& o, std::int64_t& s) {
  const SearchSpace sp = o.c.space();
  if (!o.matrix_file.empty()) {
    if (s <= 0) s = nonadaptive_min_accuracy(sp.num_vertices, sp.speed);
    return TestMatrix::parse(read_file(o.matrix_file));
  }
  if (sp.topology == Topology::Cycle) {
    if (s <= 0) s = cycle_min_accuracy(sp.num_vertices, sp.speed);
    return cycle_strategy(sp.num_vertices, s, sp.speed);
  }
  if (o.adaptive) {
    if (s <= 0) s = 4 * static_cast<std::int64_t>(sp.speed);
    return segment_strategy(sp, s);
  }
  if (s <= 0) s = nonadaptive_min_accuracy(sp.num_vertices, sp.speed);
  return sp.speed == 1 ? expanding_accuracy_matrix(sp.num_vertices) : general_k_matrix(sp.num_vertices, sp.speed);
}

int cmd_session(const SessionOpts& o, Emitter& out, bool codec_view) {
  const SearchSpace sp = o.c.space();
  std::int64_t s = o.c.s;
  const CodecStrategy strategy = session_strategy(o, s);
  if (!o.decode_bits.empty()) {
    const std::vector<int> bits = parse_bits(o.decode_bits);
    const PositionSet d = decode(sp, strategy, bits);
    json j = space_json(sp);
    j["bits"] = o.decode_bits;
    j["decoded"] = d.to_string();
    j["size"] = d.size();
    out.record(j, "bits=" + o.decode_bits + " decoded=" + d.to_string() + " size=" + std::to_string(d.size()));
    return kExitOk;
  }
  std::string source = o.source;
  if (!o.walk.empty()) source = "fixed";
  int code = kExitOk;
  for (int run = 0; run < o.runs; ++run) {
    WalkSource ws;
    if (source == "fixed") {
      if (o.walk.empty()) throw DomainError("--walk is required for a fixed source");
      ws = FixedWalkSource{Walk::parse(o.walk)};
    } else if (source == "random") {
      ws = RandomWalkSource{o.seed + static_cast<std::uint64_t>(run)};
    } else if (source == "adversarial") {
      ws = AdversarialSource{};
    } else {
      throw DomainError("unknown source '" + source + "' (fixed, random, adversarial)");
    }
    const SessionResult res = simulate_session(sp, strategy, s, ws);
    json j = space_json(sp);
    j["s"] = s;
    j["source"] = source;
    if (source == "random") j["seed"] = o.seed + static_cast<std::uint64_t>(run);
    j["walk"] = res.transcript.witness ? res.transcript.witness->to_string() : "";
    j["bits"] = bits_to_string(res.bits);
    j["decoded"] = res.decoded.to_string();
    j["final_position"] = res.final_position;
    j["contains"] = res.contains;
    j["accurate"] = res.accurate;
    j["success"] = res.success();
    std::string human;
    if (!codec_view) {
      j["transcript"] = res.transcript.serialize(true);
      human = res.transcript.serialize(true);
    }
    human += "walk=" + j["walk"].get<std::string>() + " bits=" + bits_to_string(res.bits) +
             " decoded=" + res.decoded.to_string() + " final=" + std::to_string(res.final_position) +
             (res.success() ? " ok" : " FAILED");
    out.record(j, human);
    if (!res.success()) code = kExitFailed;
  }
  return code;
}

// ---------------------------------------------------------------------------

struct AdversaryOpts {
  Common c;
  std::string mode = "greedy";
  int n = 0;
  std::string cls = "intervals";
  std::string against = "class";
  std::string matrix_file;
};

int cmd_adversary(const AdversaryOpts& o, Emitter& out) {
  const SearchSpace sp = o.c.space();
  json j = space_json(sp);
  j["mode"] = o.mode;
  if (o.mode == "counter") {
    const TestMatrix m = o.matrix_file.empty()
                             ? general_k_matrix(sp.num_vertices, sp.speed)
                             : TestMatrix::parse(read_file(o.matrix_file));
    const CounterCertificate cert = nonadaptive_counter(sp, m);
    j["rows"] = m.rows();
    j["pivot"] = cert.pivot;
    j["constant_middle"] = cert.constant_middle;
    j["answers"] = bits_to_string(cert.answers);
    j["walk1"] = cert.first.to_string();
    j["walk2"] = cert.second.to_string();
    j["final_set"] = cert.final_set.to_string();
    j["forced_accuracy"] = cert.forced_accuracy;
    j["certified"] = cert.certified;
    out.record(j, "answers=" + bits_to_string(cert.answers) + " walks " + cert.first.to_string() + " / " +
                      cert.second.to_string() + " force D_t=" + cert.final_set.to_string() + " (|D_t| = " +
                      std::to_string(cert.forced_accuracy) + ")" + (cert.certified ? " certified" : " NOT certified") +
                      ", accuracy below " + std::to_string(cert.forced_accuracy) + " refuted");
    return cert.certified ? kExitOk : kExitFailed;
  }

  if (o.against == "class") {
    const TestClass cls = parse_test_class(o.cls);
    SweepResult sw;
    if (o.mode == "greedy") {
      sw = sweep_greedy(sp, cls, o.n);
    } else if (o.mode == "window") {
      sw = sweep_window(sp, cls, o.n);
    } else if (o.mode == "margin") {
      sw = sweep_margin(sp, cls, o.n, o.c.s);
    } else {
      throw DomainError("unknown mode '" + o.mode + "' (greedy, window, margin, counter)");
    }
    const bool refuted = o.c.s > 0 && sw.value > o.c.s;
    j["n"] = o.n;
    j["class"] = o.cls;
    j["forced_min_size"] = sw.value;
    j["states"] = sw.states;
    j["invariants_held"] = sw.invariants_held;
    if (o.c.s > 0) {
      j["s"] = o.c.s;
      j["refuted"] = refuted;
    }
    std::string best;
    for (const PositionSet& t : sw.best_tests) best += (best.empty() ? "" : " ") + t.to_string();
    j["best_tests"] = best;
    std::string human = "|D_i| >= " + std::to_string(sw.value) + " for i=0.." + std::to_string(o.n) +
                        " against every " + o.cls + " sequence";
    if (o.c.s > 0) human += refuted ? ", strategy class refuted for s=" + std::to_string(o.c.s)
                                    : ", not refuted for s=" + std::to_string(o.c.s) + " (best tests: " + best + ")";
    if (!sw.invariants_held) human += " [invariants broke on some sequence]";
    out.record(j, human);
    return kExitOk;
  }

  // Against the constructed strategy for this space.
  StrategyOpts so;
  so.c = o.c;
  const AdaptiveStrategy st = build_strategy(so);
  const Searcher searcher = searcher_for(st);
  Transcript t;
  std::vector<std::string> findings;
  bool invariants = true;
  if (o.mode == "greedy") {
    t = greedy_adversary(sp, searcher, st.depth());
  } else if (o.mode == "window") {
    WindowPlay wp = window_adversary(sp, searcher, st.depth());
    t = wp.transcript;
    findings = wp.findings;
    invariants = wp.invariant_held;
  } else if (o.mode == "margin") {
    MarginPlay mp = margin_adversary(sp, searcher, st.depth(), o.c.s);
    t = mp.transcript;
    findings = mp.findings;
    invariants = mp.invariants_held;
  } else {
    throw DomainError("unknown mode '" + o.mode + "'");
  }
  j["transcript"] = t.serialize();
  j["smallest"] = t.smallest_candidate_size();
  j["realizable"] = is_realizable(sp, t);
  j["invariants_held"] = invariants;
  j["findings"] = findings;
  std::string human = t.serialize() + "smallest |D_i| = " + std::to_string(t.smallest_candidate_size());
  for (const std::string& f : findings) human += "\nfinding: " + f;
  out.record(j, human);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OracleOpts {
  Common c;
  std::string cls = "intervals";
  int budget = 8;
  bool min_accuracy = false;
  bool unbounded = false;
  int matrix_rows = -1;
  bool extract = false;
};

int cmd_oracle(const OracleOpts& o, Emitter& out) {
  const SearchSpace sp = o.c.space();
  const TestClass cls = parse_test_class(o.cls);
  if (o.matrix_rows >= 0) {
    const MatrixSearchResult res = exact_best_matrix(sp, o.c.s, o.matrix_rows);
    json j = space_json(sp);
    j["s"] = o.c.s;
    j["rows"] = o.matrix_rows;
    j["exists"] = res.exists;
    j["nodes"] = res.nodes;
    if (res.matrix) j["matrix"] = res.matrix->to_text();
    out.record(j, std::string(res.exists ? "matrix found" : "no matrix exists") + " with " +
                      std::to_string(o.matrix_rows) + " rows for s=" + std::to_string(o.c.s) +
                      (res.matrix ? "\n" + res.matrix->to_text() : ""));
    return kExitOk;
  }
  if (o.min_accuracy) {
    const std::int64_t s = exact_min_accuracy(sp, o.unbounded ? std::nullopt : std::optional<int>(o.budget), cls);
    json j = space_json(sp);
    j["class"] = o.cls;
    j["budget"] = o.unbounded ? json(nullptr) : json(o.budget);
    j["s_star"] = s;
    out.record(j, "s* = " + std::to_string(s));
    return kExitOk;
  }
  const GameValue v = exact_min_tests(sp, o.c.s, cls, o.budget, o.extract);
  const OracleRecord rec{sp.topology, sp.num_vertices, sp.speed, o.c.s, cls, sp.moves_after_last_test, v.min_tests};
  json j = json::parse(rec.to_json());
  j["budget"] = o.budget;
  j["states"] = v.states;
  std::string human = "min_tests = " + (v.min_tests ? std::to_string(*v.min_tests) : "more than " +
                                                                                         std::to_string(o.budget));
  if (v.strategy) {
    j["tree"] = v.strategy->serialize();
    human = v.strategy->serialize() + human;
  }
  out.record(j, human);
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& scale, const std::vector<std::string>& checks, Emitter& out) {
  const Scale sc = parse_scale(scale);
  bool ok = true;
  for (const std::string& name : checks.empty() ? check_names() : checks) {
    const CheckResult r = run_check(name, sc);
    ok = ok && r.passed;
    if (out.format() == Format::Human) {
      std::string human = "check " + std::to_string(r.id) + " " + r.name + ": " + (r.passed ? "PASS" : "FAIL") +
                          " - " + r.summary;
      for (const std::string& f : r.failures) human += "\n  failure: " + f;
      for (const std::string& f : r.findings) human += "\n  finding: " + f;
      out.record({}, human);
    } else {
      json j = json::parse(r.to_json());
      out.record(j, "");
      if (out.format() == Format::Jsonl) {
        for (const OracleRecord& rec : r.records) out.record(json::parse(rec.to_json()), "");
      }
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for a target moving up to k steps per round on paths and cycles"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human, jsonl or csv")
      ->check(CLI::IsMember({"human", "jsonl", "csv"}))
      ->capture_default_str();

  TableOpts table;
  auto* c_table = app.add_subcommand("table", "capacity and threshold tables");
  c_table->add_option("--topology", table.topology)->capture_default_str();
  c_table->add_option("--k", table.k)->capture_default_str();
  c_table->add_option("--s", table.s, "accuracy for capacity tables");
  c_table->add_option("--n", table.n_range, "test counts, a or a..b")->capture_default_str();
  c_table->add_flag("--s-star", table.s_star, "minimum accuracy per N instead of capacities");
  c_table->add_flag("--nonadaptive", table.nonadaptive, "non-adaptive thresholds (with --s-star)");
  c_table->add_option("--N", table.n_vertices_range, "vertex counts for --s-star")->capture_default_str();
  c_table->add_flag("--oracle", table.oracle, "cross-check --s-star rows with N <= 9 by the oracle");

  StrategyOpts strategy;
  auto* c_strategy = app.add_subcommand("strategy", "build and check an adaptive strategy");
  add_space_options(c_strategy, strategy.c, false);
  c_strategy->add_option("--kind", strategy.kind, "auto, halving, segment, shifting, sliding")->capture_default_str();
  c_strategy->add_option("--l", strategy.l, "window step for sliding (default s-3k)");
  c_strategy->add_option("--budget", strategy.budget, "test budget for sliding");
  c_strategy->add_option("--out", strategy.out_file, "write the tree here");

  MatrixOpts matrix;
  auto* c_matrix = app.add_subcommand("matrix", "build, load and evaluate non-adaptive matrices");
  c_matrix->add_option("--N", matrix.n_vertices, "number of vertices");
  c_matrix->add_option("--k", matrix.k)->capture_default_str();
  c_matrix->add_option("--matrix-file", matrix.matrix_file, "read the matrix from a file");
  c_matrix->add_option("--evaluate", matrix.evaluate, "check success for this accuracy");
  c_matrix->add_flag("--drop-last-row", matrix.drop_last);
  c_matrix->add_option("--out", matrix.out_file, "write the matrix here");

  SessionOpts sim;
  auto* c_sim = app.add_subcommand("simulate", "play a strategy against a target walk");
  SessionOpts codec;
  auto* c_codec = app.add_subcommand("codec", "encode a moving source one bit per tick and decode it");
  for (auto [cmd, o] : {std::pair{c_sim, &sim}, std::pair{c_codec, &codec}}) {
    add_space_options(cmd, o->c, false);
    cmd->add_option("--walk", o->walk, "fixed walk d_1,d_2,...");
    cmd->add_option("--source", o->source, "fixed, random or adversarial")->capture_default_str();
    cmd->add_option("--seed", o->seed)->capture_default_str();
    cmd->add_option("--runs", o->runs, "number of sessions (seeds seed, seed+1, ...)")->capture_default_str();
    cmd->add_option("--matrix-file", o->matrix_file, "non-adaptive matrix to use");
    cmd->add_flag("--adaptive", o->adaptive, "use the adaptive path strategy instead of a matrix");
  }
  c_codec->add_option("--decode", codec.decode_bits, "decode this bit string instead of encoding");

  AdversaryOpts adv;
  auto* c_adv = app.add_subcommand("adversary", "force large candidate sets");
  add_space_options(c_adv, adv.c, false);
  c_adv->add_option("--mode", adv.mode, "greedy, window, margin or counter")->capture_default_str();
  c_adv->add_option("--n", adv.n, "number of tests")->capture_default_str();
  c_adv->add_option("--class", adv.cls, "intervals or all_subsets")->capture_default_str();
  c_adv->add_option("--against", adv.against, "class (every test sequence) or strategy (constructed one)")
      ->check(CLI::IsMember({"class", "strategy"}))
      ->capture_default_str();
  c_adv->add_option("--matrix-file", adv.matrix_file, "matrix for the counter mode");

  OracleOpts orc;
  auto* c_orc = app.add_subcommand("oracle", "exact minimax values");
  add_space_options(c_orc, orc.c, false);
  c_orc->add_option("--class", orc.cls, "intervals or all_subsets")->capture_default_str();
  c_orc->add_option("--budget", orc.budget, "largest number of tests tried")->capture_default_str();
  c_orc->add_flag("--min-accuracy", orc.min_accuracy, "report the smallest winnable s");
  c_orc->add_flag("--unbounded", orc.unbounded, "no test budget for --min-accuracy");
  c_orc->add_option("--matrix-rows", orc.matrix_rows, "search for a matrix with this many rows");
  c_orc->add_flag("--extract", orc.extract, "print an optimal strategy");

  std::string scale = "default";
  std::vector<std::string> checks;
  auto* c_verify = app.add_subcommand("verify", "run the acceptance checks");
  c_verify->add_option("--scale", scale, "tiny or default")->capture_default_str();
  c_verify->add_option("--check", checks, "run only these checks (name or number)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter out(format == "jsonl" ? Format::Jsonl : format == "csv" ? Format::Csv : Format::Human);
  try {
    if (c_table->parsed()) return cmd_table(table, out);
    if (c_strategy->parsed()) return cmd_strategy(strategy, out);
    if (c_matrix->parsed()) {
      if (matrix.matrix_file.empty() && matrix.n_vertices <= 0) throw DomainError("--N or --matrix-file is required");
      return cmd_matrix(matrix, out);
    }
    if (c_sim->parsed()) return cmd_session(sim, out, false);
    if (c_codec->parsed()) return cmd_session(codec, out, true);
    if (c_adv->parsed()) return cmd_adversary(adv, out);
    if (c_orc->parsed()) return cmd_oracle(orc, out);
    if (c_verify->parsed()) return cmd_verify(scale, checks, out);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
