#include "oddtree/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

#include "oddtree/closed_forms.hpp"
#include "oddtree/error.hpp"
#include "oddtree/family.hpp"
#include "oddtree/kirchhoff.hpp"
#include "oddtree/oracle.hpp"
#include "oddtree/parity_sum.hpp"

namespace oddtree::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct SourceOptions {
  std::string graph_file;
  std::string family;
  std::string parity;
  bool json = false;
};

struct Source {
  Graph graph;
  std::optional<FamilySpec> family;
  ParityVector parity;
  bool parity_given = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& o) {
  auto* g = cmd->add_option("--graph", o.graph_file, "Edge-list file");
  auto* f = cmd->add_option("--family", o.family,
                            "complete:N | multipartite:N1,N2,... | almost:N,P | split:M,N | "
                            "ferrers:L1,L2,...");
  g->excludes(f);
  cmd->add_option("--parity", o.parity, "Comma-separated 0/1 degree parities (default all odd)");
  cmd->add_flag("--json", o.json, "Emit a JSON record");
}

Source load_source(const SourceOptions& o) {
  if (o.graph_file.empty() == o.family.empty()) {
    throw Error(ErrorKind::ParseError, "exactly one of --graph or --family is required");
  }
  Source s;
  if (!o.family.empty()) {
    s.family = parse_family_spec(o.family);
    s.graph = generate(*s.family);
  } else {
    s.graph = read_edge_list_file(o.graph_file);
  }
  if (!o.parity.empty()) {
    s.parity = parse_parity_list(o.parity);
    s.parity_given = true;
    if (s.parity.size() != s.graph.order()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "--parity has " + std::to_string(s.parity.size()) +
                      " entries but the graph has " + std::to_string(s.graph.order()) +
                      " vertices");
    }
  } else {
    s.parity = ParityVector::all_odd(s.graph.order());
  }
  return s;
}

bool is_all_odd(const ParityVector& r) { return r.popcount() == r.size(); }

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json report_json(const CountReport& r) {
  return Json{{"count", to_decimal(r.count)},
              {"method", std::string(to_string(r.method))},
              {"n", r.graph_order},
              {"assignments_evaluated", r.assignments_evaluated}};
}

std::string summary_line(const CountReport& r) {
  std::ostringstream s;
  s << "method=" << to_string(r.method) << " n=" << r.graph_order
    << " assignments_evaluated=" << r.assignments_evaluated;
  return s.str();
}

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct CountCommand {
  SourceOptions src;
  unsigned workers = default_workers();
  bool force = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("count", "Count spanning trees with the requested degree parities");
    add_source_options(cmd, src);
    cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--force", force, "Allow orders above the default size guard");
  }

  int run(std::ostream& out) const {
    auto start = Clock::now();
    Source s = load_source(src);
    CountReport r = count_parity_constrained(s.graph, s.parity, {workers, force});
    std::ostringstream buf;
    if (src.json) {
      Json j = report_json(r);
      j["elapsed_ms"] = elapsed_ms(start);
      buf << j.dump() << '\n';
    } else {
      buf << to_decimal(r.count) << '\n' << summary_line(r) << '\n';
    }
    out << buf.str();
    return kExitOk;
  }
};

struct VerifyCommand {
  SourceOptions src;
  unsigned workers = default_workers();
  bool force = false;
  std::size_t cap = kDefaultEnumerationCap;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "Cross-check sign-sum, closed form and enumeration");
    add_source_options(cmd, src);
    cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--force", force, "Allow orders above the default size guard");
    cmd->add_option("--cap", cap, "Skip enumeration above this many spanning trees");
  }

  int run(std::ostream& out) const {
    auto start = Clock::now();
    Source s = load_source(src);

    std::vector<CountReport> results;
    results.push_back(count_parity_constrained(s.graph, s.parity, {workers, force}));

    std::string closed_note;
    if (s.family && is_all_odd(s.parity)) {
      results.push_back(odd_count(*s.family));
    } else {
      closed_note = s.family ? "n/a (closed forms count odd trees only)"
                             : "n/a (not a family instance)";
    }

    std::string oracle_note;
    try {
      BigInt c = count_filtered(s.graph, filter::ParityMatch{s.parity}, {cap});
      results.push_back(CountReport{c, Method::Oracle, s.graph.order(), 0});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EnumerationCapExceeded) throw;
      oracle_note = std::string("skipped (") + e.what() + ")";
    }

    bool agree = true;
    for (const auto& r : results) agree = agree && r.count == results.front().count;

    std::ostringstream buf;
    if (src.json) {
      Json j;
      j["n"] = s.graph.order();
      j["results"] = Json::array();
      for (const auto& r : results) j["results"].push_back(report_json(r));
      j["agree"] = agree;
      j["elapsed_ms"] = elapsed_ms(start);
      buf << j.dump() << '\n';
    } else {
      auto line = [&](Method m, const std::string& note) {
        buf << to_string(m) << ": ";
        for (const auto& r : results) {
          if (r.method == m) {
            buf << to_decimal(r.count) << '\n';
            return;
          }
        }
        buf << note << '\n';
      };
      line(Method::SignSum, "");
      line(Method::ClosedForm, closed_note);
      line(Method::Oracle, oracle_note);
      buf << (agree ? "PASS" : "FAIL") << '\n';
    }
    out << buf.str();
    return agree ? kExitOk : kExitMismatch;
  }
};

struct OracleCommand {
  SourceOptions src;
  std::string filter_name = "odd";
  bool histogram = false;
  bool dump = false;
  std::size_t cap = kDefaultEnumerationCap;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("oracle", "Enumerate spanning trees explicitly");
    add_source_options(cmd, src);
    cmd->add_option("--filter", filter_name, "odd | hist | all | parity")
        ->check(CLI::IsMember({"odd", "hist", "all", "parity"}));
    cmd->add_flag("--histogram", histogram, "Print the labeled degree-sequence histogram");
    cmd->add_flag("--dump-trees", dump, "Print every spanning tree");
    cmd->add_option("--cap", cap, "Refuse graphs with more spanning trees than this");
  }

  int run(std::ostream& out) const {
    auto start = Clock::now();
    Source s = load_source(src);
    if (filter_name == "parity" && !s.parity_given) {
      throw Error(ErrorKind::InvalidParity, "--filter parity requires --parity");
    }
    DegreeFilter f = filter::AllOdd{};
    if (filter_name == "hist") f = filter::NoDegreeTwo{};
    if (filter_name == "all") f = filter::All{};
    if (filter_name == "parity") f = filter::ParityMatch{s.parity};

    const OracleOptions opts{cap};
    CountReport r{count_filtered(s.graph, f, opts), Method::Oracle, s.graph.order(), 0};
    DegreeHistogram hist;
    if (histogram) hist = degree_histogram(s.graph, opts);
    std::ostringstream trees;
    if (dump) dump_trees(s.graph, trees, opts);

    std::ostringstream buf;
    if (src.json) {
      Json j = report_json(r);
      j["filter"] = filter_name;
      if (histogram) {
        j["histogram"] = Json::array();
        for (const auto& [d, c] : hist) {
          j["histogram"].push_back(Json{{"degrees", d}, {"count", to_decimal(c)}});
        }
      }
      j["elapsed_ms"] = elapsed_ms(start);
      buf << j.dump() << '\n';
    } else {
      buf << to_decimal(r.count) << '\n'
          << "method=oracle n=" << r.graph_order << " filter=" << filter_name << '\n';
      for (const auto& [d, c] : hist) {
        for (std::size_t i = 0; i < d.size(); ++i) buf << (i ? "," : "") << d[i];
        buf << ": " << to_decimal(c) << '\n';
      }
    }
    buf << trees.str();
    out << buf.str();
    return kExitOk;
  }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of odd and parity-constrained spanning trees"};
  app.require_subcommand(1);
  CountCommand count;
  VerifyCommand verify;
  OracleCommand oracle;
  count.attach(app);
  verify.attach(app);
  oracle.attach(app);

  std::vector<std::string> reversed;
  for (std::size_t i = args.size(); i-- > 1;) reversed.push_back(args[i]);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.got_subcommand("count")) return count.run(out);
    if (app.got_subcommand("verify")) return verify.run(out);
    return oracle.run(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SizeGuard ? kExitSizeGuard : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace oddtree::cli
