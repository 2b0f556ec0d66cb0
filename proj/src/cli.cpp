#include "aft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "aft/canon.hpp"
#include "aft/enumerate.hpp"
#include "aft/poset.hpp"
#include "aft/special_leaf.hpp"
#include "aft/tree.hpp"

namespace aft::cli {

namespace {

std::size_t to_size(long long value, std::size_t low, std::size_t high,
                    const char* what) {
  if (value < static_cast<long long>(low) ||
      value > static_cast<long long>(high)) {
    throw TreeError(ErrorCode::kOutOfRange,
                    std::string(what) + "=" + std::to_string(value) +
                        " is outside " + std::to_string(low) + ".." +
                        std::to_string(high));
  }
  return static_cast<std::size_t>(value);
}

std::string edge_list(const Tree& t) {
  std::string out;
  for (auto [u, v] : t.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file || !(file << content) || !file.flush()) {
    throw TreeError(ErrorCode::kIoError, "cannot write " + path);
  }
}

}  // namespace

int cmd_check(const std::string& path, std::ostream& out) {
  const Tree t = read_tree_file(path);
  const auto info = center_info(t);

  std::vector<std::size_t> degrees;
  for (VertexId v = 0; v < t.size(); ++v) degrees.push_back(t.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());

  out << "n: " << t.size() << '\n' << "degree sequence:";
  for (auto d : degrees) out << ' ' << d;
  out << '\n' << "centers:";
  for (auto c : info.centers) out << ' ' << c;
  out << '\n' << "radius: " << info.radius << '\n';
  out << "|Aut|=" << aut_order(t).order << '\n';
  out << "asymmetric: " << (t.size() >= 2 && is_asymmetric(t) ? "yes" : "no")
      << '\n';
  out << "code: " << canonical_code(t).text << '\n';
  return kOk;
}

int cmd_special_leaf(const std::string& path, long long root,
                     std::ostream& out) {
  const Tree t = read_tree_file(path);
  if (root < 0 || !t.contains(static_cast<VertexId>(root)) ||
      root >= static_cast<long long>(kNoVertex)) {
    throw TreeError(ErrorCode::kBadVertexId,
                    "root " + std::to_string(root) + " is not a vertex");
  }
  out << format_certificate(find_special_leaf(t, static_cast<VertexId>(root)));
  return kOk;
}

int cmd_reduce(const std::string& path, std::optional<std::uint64_t> seed,
               std::ostream& out) {
  const Tree t = read_tree_file(path);
  const auto trace = reduce_to_e7(t, seed);
  out << "steps " << trace.steps.size() << '\n' << format_trace(trace);
  return kOk;
}

int cmd_enumerate(long long n, bool asymmetric, bool count_only,
                  std::ostream& out) {
  const auto size = to_size(n, asymmetric && !count_only ? 2 : 1,
                            kMaxEnumerationN, "n");
  if (count_only) {
    out << "n\ttotal\tasymmetric\n";
    for (const auto& row : count_report(size)) {
      out << row.n << '\t' << row.total << '\t' << row.asymmetric << '\n';
    }
    return kOk;
  }
  EnumerationStream stream = asymmetric ? asymmetric_trees(size) : all_trees(size);
  while (auto item = stream.next()) {
    out << item->code.text << '\t' << edge_list(item->tree) << '\n';
  }
  return kOk;
}

int cmd_verify(long long n_max, std::ostream& out) {
  const auto top = to_size(n_max, 7, kMaxEnumerationN, "max-n");
  const auto started = std::chrono::steady_clock::now();
  bool ok = true;

  const auto diagram = build_hasse(top);
  const auto& bottom = diagram.levels.front();
  if (bottom.nodes.size() != 1 || bottom.nodes.front().code != e7_code()) {
    out << "level 7: expected exactly one class, isomorphic to E7\n";
    ok = false;
  }

  for (const auto& level : diagram.levels) {
    std::size_t stuck = 0;
    std::size_t reduced = 0;
    for (const auto& node : level.nodes) {
      if (level.n > 7 && safe_leaves(node.representative).empty()) ++stuck;
      try {
        auto trace = reduce_to_e7(node.representative);
        if (auto problem = check_trace(trace)) {
          out << "invalid trace for " << node.code.text << ": " << *problem
              << '\n';
          ok = false;
        } else {
          ++reduced;
        }
      } catch (const TreeError& e) {
        if (e.code() != ErrorCode::kStuckNotAtE7) throw;
        out << e.what() << '\n';
        ok = false;
      }
    }
    if (stuck > 0) ok = false;
    out << "level " << level.n << ": asymmetric " << level.nodes.size()
        << ", without safe leaf " << stuck << ", reduced to E7 " << reduced
        << '\n';
  }

  const auto minimal = minimal_elements(diagram);
  out << "minimal elements:";
  for (const auto& code : minimal) out << ' ' << code.text;
  out << '\n';
  if (minimal.size() != 1 || minimal.front() != e7_code()) ok = false;

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;
  out << "elapsed: " << std::fixed << std::setprecision(2) << elapsed.count()
      << "s\n";
  out << "result: " << (ok ? "ok" : "VIOLATION") << '\n';
  return ok ? kOk : kPropertyViolated;
}

int cmd_hasse(long long n_max, const std::string& dot_path,
              const std::string& tsv_path, std::ostream& out) {
  const auto top = to_size(n_max, 7, kMaxEnumerationN, "max-n");
  const auto diagram = build_hasse(top);
  write_file(dot_path, to_dot(diagram));
  if (!tsv_path.empty()) write_file(tsv_path, to_tsv(diagram));

  std::size_t nodes = 0;
  for (const auto& level : diagram.levels) {
    out << "level " << level.n << ": " << level.nodes.size() << " nodes\n";
    nodes += level.nodes.size();
  }
  out << "nodes " << nodes << '\n' << "edges " << diagram.covers.size() << '\n';
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Asymmetric tree toolkit", "aft"};
  app.require_subcommand(1);

  std::string file;
  long long root = 0;
  std::optional<std::uint64_t> seed;
  long long n = 0;
  bool asymmetric = false;
  bool count_only = false;
  long long max_n = 0;
  std::string dot_path;
  std::string tsv_path;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Structure and symmetry report");
  check->add_option("file", file, "Tree file")->required();
  check->callback([&] { action = [&] { return cmd_check(file, out); }; });

  auto* special =
      app.add_subcommand("special-leaf", "Special leaf with certificate");
  special->add_option("file", file, "Tree file")->required();
  special->add_option("--root", root, "Anchor vertex")->required();
  special->callback(
      [&] { action = [&] { return cmd_special_leaf(file, root, out); }; });

  auto* reduce = app.add_subcommand("reduce", "Leaf-deletion chain down to E7");
  reduce->add_option("file", file, "Tree file")->required();
  reduce->add_option("--random-tiebreak", seed, "Pick safe leaves at random");
  reduce->callback([&] { action = [&] { return cmd_reduce(file, seed, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List free trees on N vertices");
  enumerate->add_option("n", n, "Vertex count")->required();
  enumerate->add_flag("--asymmetric", asymmetric, "Only asymmetric trees");
  enumerate->add_flag("--count-only", count_only, "Per-n counts as TSV");
  enumerate->callback([&] {
    action = [&] { return cmd_enumerate(n, asymmetric, count_only, out); };
  });

  auto* verify = app.add_subcommand("verify", "Check that E7 is the unique minimal element");
  verify->add_option("--max-n", max_n, "Largest vertex count")->required();
  verify->callback([&] { action = [&] { return cmd_verify(max_n, out); }; });

  auto* hasse = app.add_subcommand("hasse", "Export the cover relation");
  hasse->add_option("--max-n", max_n, "Largest vertex count")->required();
  hasse->add_option("--out", dot_path, "DOT output file")->required();
  hasse->add_option("--tsv", tsv_path, "Optional TSV edge list");
  hasse->callback([&] {
    action = [&] { return cmd_hasse(max_n, dot_path, tsv_path, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    return action();
  } catch (const TreeError& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kStuckNotAtE7 ? kPropertyViolated
                                                : kUsageError;
  }
}

}  // namespace aft::cli
