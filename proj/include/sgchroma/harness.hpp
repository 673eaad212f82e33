#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgchroma/color.hpp"
#include "sgchroma/graph.hpp"
#include "sgchroma/rational.hpp"

namespace sgchroma {

// --- graph families ---------------------------------------------------

UnsignedGraph complete_graph(int n);
UnsignedGraph cycle_graph(int n);
UnsignedGraph path_graph(int n);

// Doubles each edge into a positive/negative parallel pair (a digon).
SignedGraph tilde(const UnsignedGraph& g);
// All edges negative.
SignedGraph minus(const UnsignedGraph& g);

// Seeded mt19937_64; pair (u,v) in lex order draws edge presence then sign.
// Draws are mapped to [0,1) by fixed 53-bit scaling, so streams are stable
// across platforms.
SignedGraph random_signed_graph(int n, double edge_p, double neg_p, std::uint64_t seed);

// --- enumeration -------------------------------------------------------

struct EnumOptions {
    int n = 0;
    bool digons = false;  // allow the fourth pair state (both signs)
    bool loops = false;   // per-vertex states none/positive/negative
    int max_n = 6;
};

// One canonical representative per switching-isomorphism class of signed
// graphs of order exactly n, sorted by canonical form. Layered generation:
// unsigned skeletons up to isomorphism, digon markings, then signatures on
// a spanning forest transversal, deduplicated by canonical form.
std::vector<SignedGraph> enumerate_all(const EnumOptions& opt);

// Loopless simple unsigned graphs of order n up to isomorphism, as
// canonical adjacency masks in increasing order.
std::vector<std::uint32_t> enumerate_unsigned(int n, int max_n = 7);

// --- scans ---------------------------------------------------------------

enum class ExecMode { Serial, Parallel };

enum class CheckName {
    SignedHadwiger,   // chi_b >= t implies a ktilde-minor (t <= 3 proven range)
    OddRelation,      // chi_b(G,-) == ceil(chi(G)/2)
    EvenOdd,          // no even-odd clique minor of order t in graphs on <= 2t-2 vertices
    FractionalBound,  // no ktilde_t-minor implies chi_fb <= 2t-2
    SubdivisionTable, // subdivision certificates convert to verified minors
    QuotientAudit,    // quotient verifies; chi_b(quotient) == chi_b(g)
};

std::string check_name_str(CheckName c);
std::optional<CheckName> parse_check_name(const std::string& s);

struct ScanSpec {
    CheckName check = CheckName::SignedHadwiger;
    int t = 2;
    int n = 4;
    bool digons = false;       // corpus includes digon pair states
    bool random_corpus = false;
    int count = 0;             // random corpus size
    std::uint64_t seed = 0;
    ExecMode mode = ExecMode::Parallel;
};

struct ExtremalRecord {
    ScanSpec spec;
    long corpus_size = 0;
    long counterexamples = 0;
    std::vector<std::string> counterexample_forms;  // canonical forms
    std::vector<std::string> counterexample_graphs; // text format, re-checkable
    // Named observed extrema, e.g. largest chi_b among minor-free graphs.
    std::vector<std::pair<std::string, std::string>> extrema;
    std::vector<std::string> notes;
};

// Evaluates the named check over the corpus. Parallel over graphs; results
// are merged in corpus order, so serial and parallel runs agree byte for
// byte. Counterexamples are collected, never fatal.
ExtremalRecord run_scan(const ScanSpec& spec);

enum class ReportFormat { Json, Csv, Text };
std::string report(const ExtremalRecord& record, ReportFormat format);

// Thread cap: explicit argument wins, else SGCHROMA_THREADS, else OpenMP
// default.
int effective_threads();

}  // namespace sgchroma
