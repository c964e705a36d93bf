#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gra/canonical.hpp"
#include "gra/checks.hpp"
#include "gra/dgla.hpp"
#include "gra/error.hpp"
#include "gra/homology.hpp"
#include "gra/sums.hpp"

namespace gra::cli {

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// "-" reads standard input, "@path" reads a file, anything else is literal.
std::string resolve(const std::string& arg, std::istream& in) {
  if (arg == "-") return slurp(in);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw ParseError("cannot open " + arg.substr(1));
    return slurp(file);
  }
  return arg;
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return slurp(file);
}

// A graph literal becomes a one-term sum with its edge order intact.
RawSum operand(const std::string& arg, std::istream& in) {
  const std::string text = resolve(arg, in);
  if (text.find('*') == std::string::npos) {
    RawSum s;
    s.add(1, parse_graph(text));
    return s;
  }
  return parse_sum(text);
}

Graph graph_operand(const std::string& arg, std::istream& in) { return parse_graph(resolve(arg, in)); }

RawSum bilinear_raw(const RawSum& a, const RawSum& b, RawSum (*op)(const Graph&, const Graph&)) {
  RawSum out;
  for (const Term& x : a)
    for (const Term& y : b) out.append(op(x.graph, y.graph), x.coeff * y.coeff);
  return out;
}

RawSum linear_raw(const RawSum& a, RawSum (*op)(const Graph&)) {
  RawSum out;
  for (const Term& x : a) out.append(op(x.graph), x.coeff);
  return out;
}

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "+1";
    case Verdict::Negative: return "-1";
    case Verdict::Zero: return "zero";
  }
  return "?";
}

void report(const CheckReport& r, std::ostream& out) {
  if (r.passed)
    out << "PASS (" << r.cases << " cases)\n";
  else
    out << "FAIL after " << r.cases << " cases: " << r.counterexample << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the graph complex Gra: canonical forms, brackets, the differential, cocycles", "gracalc"};
  app.require_subcommand(1);

  std::string a, b;
  bool raw = false;
  int status = kExitOk;

  auto* canon = app.add_subcommand("canon", "Print the sign verdict and canonical form of a graph");
  canon->add_option("graph", a, "Graph literal, - for stdin, @file")->required();
  canon->callback([&] {
    const auto r = canonicalize(graph_operand(a, in));
    out << verdict_text(r.verdict) << "\n" << serialize_graph(r.canonical) << "\n";
  });

  auto* zero = app.add_subcommand("is-zero", "Decide whether a graph has an edge-odd automorphism");
  zero->add_option("graph", a)->required();
  zero->callback([&] {
    const auto r = is_zero_graph(graph_operand(a, in));
    out << (r.is_zero ? "true" : "false") << "\n";
    if (r.witness) out << "witness: " << serialize_permutation(*r.witness) << "\n";
  });

  auto* aut = app.add_subcommand("aut", "List all automorphisms (1-based image lists)");
  aut->add_option("graph", a)->required();
  aut->callback([&] {
    for (const auto& p : automorphisms(graph_operand(a, in))) out << serialize_permutation(p) << "\n";
  });

  auto* ins = app.add_subcommand("insert", "Insertion of A into the vertices of B");
  ins->add_option("A", a)->required();
  ins->add_option("B", b)->required();
  ins->add_flag("--raw", raw, "Print unreduced terms");
  ins->callback([&] {
    const RawSum s = bilinear_raw(operand(a, in), operand(b, in), &insert);
    out << (raw ? serialize_sum(s) : serialize_sum(reduce(s)));
  });

  auto* br = app.add_subcommand("bracket", "Graded bracket [A, B]");
  br->add_option("A", a)->required();
  br->add_option("B", b)->required();
  br->add_flag("--raw", raw, "Print unreduced terms");
  br->callback([&] {
    const RawSum x = operand(a, in), y = operand(b, in);
    out << (raw ? serialize_sum(bilinear_raw(x, y, &bracket_raw)) : serialize_sum(bracket(reduce(x), reduce(y))));
  });

  bool direct = false, via_bracket = false;
  auto* d = app.add_subcommand("d", "Differential d(A) = [edge, A]");
  d->add_option("A", a)->required();
  d->add_flag("--raw", raw, "Print unreduced terms");
  auto* direct_flag = d->add_flag("--direct", direct, "Sum over two-part blow-ups (leafless input only)");
  d->add_flag("--via-bracket", via_bracket, "Bracket with the edge (default)")->excludes(direct_flag);
  d->callback([&] {
    const RawSum x = operand(a, in);
    if (direct) {
      const RawSum s = linear_raw(x, &d_direct);
      out << (raw ? serialize_sum(s) : serialize_sum(reduce(s)));
    } else {
      out << (raw ? serialize_sum(linear_raw(x, &d_via_bracket_raw)) : serialize_sum(d_via_bracket(reduce(x))));
    }
  });

  std::string sum_file;
  auto* red = app.add_subcommand("reduce", "Reduce a sum file to canonical form");
  red->add_option("sum-file", sum_file, "Path, or - for stdin")->required();
  red->callback([&] { out << serialize_sum(reduce(parse_sum(read_file(sum_file, in)))); });

  std::size_t max_vertices = 5, max_edges = 8, trials = 100, jacobi_vertices = 4;
  std::uint64_t seed = kDefaultSeed;
  auto* check = app.add_subcommand("check", "Run an identity suite");
  check->require_subcommand(1);
  auto* d2 = check->add_subcommand("d2", "d(d(g)) cancels identically for every leafless graph");
  d2->add_option("--max-vertices", max_vertices)->capture_default_str();
  d2->add_option("--max-edges", max_edges)->capture_default_str();
  d2->callback([&] {
    const auto r = check_d_squared(max_vertices, max_edges);
    report(r, out);
    if (!r.passed) status = kExitFailure;
  });
  auto* jac = check->add_subcommand("jacobi", "Graded Jacobi identity on random triples");
  jac->add_option("--max-vertices", jacobi_vertices)->capture_default_str();
  jac->add_option("--trials", trials)->capture_default_str();
  jac->add_option("--seed", seed)->capture_default_str();
  jac->callback([&] {
    const auto r = check_jacobi(jacobi_vertices, trials, seed);
    report(r, out);
    if (!r.passed) status = kExitFailure;
  });

  std::size_t n = 0, k = 0;
  bool connected = false;
  auto* coc = app.add_subcommand("cocycles", "Basis of ker d on leafless non-zero graphs");
  coc->add_option("--vertices", n)->required();
  coc->add_option("--edges", k)->required();
  coc->add_flag("--connected", connected);
  coc->callback([&] {
    const auto basis = cocycle_space(n, k, {.connected = connected});
    out << "dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) out << "# cocycle " << i + 1 << "\n" << serialize_sum(basis[i]);
  });

  auto* mat = app.add_subcommand("dmatrix", "Matrix of d from (n, k) to (n+1, k+1)");
  mat->add_option("--vertices", n)->required();
  mat->add_option("--edges", k)->required();
  mat->add_flag("--connected", connected);
  mat->callback([&] {
    const DMatrix m = d_matrix(n, k, {.connected = connected});
    out << export_matrix(m.entries, m.cols());
  });

  bool leafless = false, exclude_zero = false;
  auto* en = app.add_subcommand("enumerate", "One canonical graph per isomorphism class");
  en->add_option("--vertices", n)->required();
  en->add_option("--edges", k)->required();
  en->add_flag("--connected", connected);
  en->add_flag("--leafless", leafless);
  en->add_flag("--exclude-zero", exclude_zero);
  en->callback([&] {
    for (const Graph& g : enumerate_graphs(n, k, {.connected = connected, .leafless = leafless, .exclude_zero = exclude_zero}))
      out << serialize_graph(g) << "\n";
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return status;
}

}  // namespace gra::cli
