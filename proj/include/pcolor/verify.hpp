#pragma once

// Exhaustive verification harnesses. Each harness sweeps every connected
// graph up to a given order (enumerated in-process or loaded from a corpus),
// decides the property of interest by brute force, decides it independently
// by construction/classification, and reports any graph where the two
// disagree. A clean run is a machine-checked proof of the statement at that
// scale.

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pcolor/criticality.hpp"
#include "pcolor/enumerate.hpp"
#include "pcolor/families.hpp"
#include "pcolor/g3.hpp"
#include "pcolor/graph6.hpp"
#include "pcolor/packing.hpp"

namespace pcolor {

struct TheoremReport {
  std::string id;  // "vc4", "c4", "g3", "formulas"
  int max_n = 0;
  struct OrderCount {
    int n = 0;
    long scanned = 0;     // graphs examined at this order
    long brute = 0;       // graphs the brute-force decision accepted
    long classified = 0;  // graphs the constructive decision accepted
  };
  std::vector<OrderCount> per_order;
  // (graph6, human-readable verdict) for every disagreement.
  std::vector<std::pair<std::string, std::string>> mismatches;
  double elapsed_seconds = 0.0;

  bool ok() const { return mismatches.empty(); }

  std::string summary_line() const {
    std::ostringstream out;
    out << "THEOREM " << id << " n<=" << max_n << " " << (ok() ? "OK" : "FAIL")
        << " mismatches=" << mismatches.size();
    return out.str();
  }

  std::string to_text(bool include_elapsed = true) const {
    std::ostringstream out;
    out << summary_line() << "\n";
    for (const OrderCount& c : per_order)
      out << "n=" << c.n << " scanned=" << c.scanned << " brute=" << c.brute
          << " classified=" << c.classified << "\n";
    for (const auto& [g6, verdict] : mismatches)
      out << "mismatch " << g6 << " " << verdict << "\n";
    if (include_elapsed) {
      out.setf(std::ios::fixed);
      out.precision(2);
      out << "elapsed " << elapsed_seconds << "s\n";
    }
    return out.str();
  }
};

struct VerifyOptions {
  int max_n = 7;
  int jobs = 1;
  std::string corpus;  // optional graph6 file replacing in-process enumeration
};

namespace detail {

// Graphs grouped by order. With a corpus, disconnected entries and entries
// above max_n are skipped (the statements quantify over connected graphs).
inline std::vector<std::vector<Graph>> graphs_by_order(
    const VerifyOptions& options) {
  if (options.max_n < 1) throw error("verification needs max_n >= 1");
  std::vector<std::vector<Graph>> by_order(options.max_n + 1);
  if (options.corpus.empty()) {
    for (int n = 1; n <= options.max_n; ++n)
      by_order[n] = enumerate_connected(n);
  } else {
    for (Graph& g : load_graph6_corpus(options.corpus)) {
      if (g.order() < 1 || g.order() > options.max_n) continue;
      if (!is_connected(g)) continue;
      by_order[g.order()].push_back(std::move(g));
    }
  }
  return by_order;
}

struct ChunkResult {
  long brute = 0;
  long classified = 0;
  std::vector<std::pair<std::string, std::string>> mismatches;
};

// Runs `check` over every graph of one order, split into `jobs` contiguous
// chunks. Chunk results are merged in chunk order, so the report is
// byte-identical for any job count.
template <typename Check>
inline void sweep_order(const std::vector<Graph>& graphs, int jobs,
                        TheoremReport::OrderCount& counts,
                        TheoremReport& report, Check check) {
  if (jobs < 1) jobs = 1;
  size_t total = graphs.size();
  counts.scanned = static_cast<long>(total);
  size_t n_chunks = std::min<size_t>(static_cast<size_t>(jobs),
                                     total == 0 ? 1 : total);
  std::vector<ChunkResult> results(n_chunks);
  auto run_chunk = [&graphs, total, n_chunks, &results, &check](size_t c) {
    size_t begin = total * c / n_chunks;
    size_t end = total * (c + 1) / n_chunks;
    for (size_t i = begin; i < end; ++i) check(graphs[i], results[c]);
  };
  if (n_chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> workers;
    for (size_t c = 0; c < n_chunks; ++c) workers.emplace_back(run_chunk, c);
    for (std::thread& w : workers) w.join();
  }
  for (const ChunkResult& r : results) {
    counts.brute += r.brute;
    counts.classified += r.classified;
    for (const auto& m : r.mismatches) report.mismatches.push_back(m);
  }
}

template <typename Check>
inline TheoremReport run_sweep(const std::string& id,
                               const VerifyOptions& options, Check check) {
  auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = id;
  report.max_n = options.max_n;
  std::vector<std::vector<Graph>> by_order = graphs_by_order(options);
  for (int n = 1; n <= options.max_n; ++n) {
    TheoremReport::OrderCount counts;
    counts.n = n;
    sweep_order(by_order[n], options.jobs, counts, report, check);
    report.per_order.push_back(counts);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace detail

// Every connected graph is 4-chi_rho-vertex-critical exactly when it matches
// the vertex-critical catalogue.
inline TheoremReport verify_vertex_critical_theorem(
    const VerifyOptions& options) {
  return detail::run_sweep(
      "vc4", options, [](const Graph& g, detail::ChunkResult& out) {
        bool brute = is_k_vertex_critical(g, 4);
        bool classified =
            !classify(g, Universe::vertex_critical).matches.empty();
        if (brute) ++out.brute;
        if (classified) ++out.classified;
        if (brute != classified)
          out.mismatches.emplace_back(
              to_graph6(g), std::string("brute=") + (brute ? "yes" : "no") +
                                " classified=" + (classified ? "yes" : "no"));
      });
}

// Every connected graph is 4-chi_rho-critical exactly when it matches the
// subgraph-critical catalogue.
inline TheoremReport verify_critical_theorem(const VerifyOptions& options) {
  return detail::run_sweep(
      "c4", options, [](const Graph& g, detail::ChunkResult& out) {
        bool brute = is_k_critical(g, 4);
        bool classified = !classify(g, Universe::critical).matches.empty();
        if (brute) ++out.brute;
        if (classified) ++out.classified;
        if (brute != classified)
          out.mismatches.emplace_back(
              to_graph6(g), std::string("brute=") + (brute ? "yes" : "no") +
                                " classified=" + (classified ? "yes" : "no"));
      });
}

// The structural recognizer accepts exactly the connected graphs with
// chi_rho = 3, and every certificate it emits re-validates.
inline TheoremReport verify_g3_recognizer(const VerifyOptions& options) {
  return detail::run_sweep(
      "g3", options, [](const Graph& g, detail::ChunkResult& out) {
        bool brute = chi_rho(g).value == 3;
        std::optional<G3Certificate> cert = recognize_g3(g);
        if (brute) ++out.brute;
        if (cert) ++out.classified;
        if (brute != cert.has_value()) {
          out.mismatches.emplace_back(
              to_graph6(g), std::string("brute=") + (brute ? "3" : "not-3") +
                                " recognized=" + (cert ? "yes" : "no"));
        } else if (cert && !validate_certificate(g, *cert)) {
          out.mismatches.emplace_back(to_graph6(g), "invalid-certificate");
        }
      });
}

// The closed forms for paths (n <= 16), cycles (3..16) and cliques (n <= 8)
// agree with the exact solver.
inline TheoremReport verify_formula_tables() {
  auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = "formulas";
  report.max_n = 16;
  report.per_order.resize(16);
  for (int n = 1; n <= 16; ++n) report.per_order[n - 1].n = n;
  auto check = [&report](const Shape& shape, const Graph& g,
                         const std::string& name) {
    TheoremReport::OrderCount& counts = report.per_order[g.order() - 1];
    ++counts.scanned;
    int solved = chi_rho(g).value;
    int formula = chi_rho_closed_form(shape);
    ++counts.brute;
    if (solved == formula)
      ++counts.classified;
    else
      report.mismatches.emplace_back(
          to_graph6(g), name + " solver=" + std::to_string(solved) +
                            " formula=" + std::to_string(formula));
  };
  for (int n = 1; n <= 16; ++n)
    check(path_shape(n), make_path(n), "P_" + std::to_string(n));
  for (int n = 3; n <= 16; ++n)
    check(cycle_shape(n), make_cycle(n), "C_" + std::to_string(n));
  for (int n = 1; n <= 8; ++n)
    check(clique_shape(n), make_complete(n), "K_" + std::to_string(n));
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace pcolor
