#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcirc/error.hpp"
#include "qcirc/kirby.hpp"
#include "qcirc/ledger.hpp"
#include "qcirc/linalg.hpp"
#include "qcirc/obstruct.hpp"
#include "qcirc/plumbing.hpp"
#include "qcirc/sl2.hpp"
#include "qcirc/strings.hpp"

namespace qcirc::cli {

namespace {

using linalg::IntMatrix;
using linalg::Integer;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_integers(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].get_str();
  }
  return out;
}

// Rows separated by ';', entries by ','.
std::string inline_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += m(r, c).get_str();
    }
  }
  return out;
}

void print_group(std::ostream& out, const linalg::AbelianGroupDesc& h) {
  out << "free_rank=" << h.free_rank << "\n";
  out << "torsion=" << join_integers(h.torsion_factors) << "\n";
  out << "torsion_order=" << h.torsion_order().get_str() << "\n";
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

// Values such as "-:2,2", "-T^5" or "-3,-1" would be read as short options.
// No option here is a single-dash name besides -h, so they are swapped for
// placeholders before parsing and restored afterwards.
constexpr std::string_view kShield = "\x01arg";

std::string shield_dash(const std::string& token, std::vector<std::string>& shielded) {
  if (token.size() < 2 || token[0] != '-' || token[1] == '-' || token == "-h") return token;
  shielded.push_back(token);
  return std::string(kShield) + std::to_string(shielded.size() - 1);
}

std::string unshield(const std::string& value, const std::vector<std::string>& shielded) {
  if (value.rfind(kShield, 0) != 0) return value;
  return shielded.at(std::stoul(value.substr(kShield.size())));
}

struct Commands {
  std::ostringstream out;

  // dual / cf
  std::string string_arg;
  // mono
  std::string word_arg;
  bool classify = false;
  bool torsion = false;
  bool square_check = false;
  // rotation
  std::string other_arg;
  // files
  std::string file_arg;
  std::string file2_arg;
  std::string v1;
  std::string v2;
  std::string sign_arg = "+";
  std::string kappa_arg;
  std::string framing_arg;
  std::string script_arg;
  std::string history_arg;
};

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Commands cmd;
  CLI::App app{"Exact invariants of plumbings, torus bundles and chain surgeries", "qcirc"};
  app.require_subcommand(1);

  auto* dual = app.add_subcommand("dual", "Dual string of a string with entries >= 2");
  dual->add_option("string", cmd.string_arg, "comma-separated entries, e.g. 2,2,2")->required();

  auto* cf = app.add_subcommand("cf", "Negative continued fraction of a string");
  cf->add_option("string", cmd.string_arg, "comma-separated entries")->required();

  auto* mono = app.add_subcommand("mono", "Monodromy of a word (a1,..,an or -:a1,..) or T^n / -T^n");
  mono->add_option("word", cmd.word_arg, "monodromy word")->required();
  auto* f_classify = mono->add_flag("--classify", cmd.classify, "elliptic/parabolic/hyperbolic and trace sign");
  auto* f_torsion = mono->add_flag("--torsion", cmd.torsion, "torsion order |tr - 2|");
  auto* f_square = mono->add_flag("--square-check", cmd.square_check, "whether tr^2 - 4 is a perfect square");
  f_classify->excludes(f_torsion)->excludes(f_square);
  f_torsion->excludes(f_square);

  auto* rotation = app.add_subcommand("rotation", "Whether two strings agree up to cyclic rotation");
  rotation->add_option("a", cmd.string_arg)->required();
  rotation->add_option("b", cmd.other_arg)->required();

  auto* family = app.add_subcommand("family", "Hyperbolic family strings");
  family->require_subcommand(1);
  auto* family_gen = family->add_subcommand("gen", "String from parameters k=..;x=..");
  family_gen->add_option("params", cmd.string_arg, "e.g. k=1;x=0,0,0")->required();
  auto* family_check = family->add_subcommand("check", "Recognize a family string up to rotation");
  family_check->add_option("string", cmd.string_arg)->required();
  auto* family_split = family->add_subcommand("split", "Split a family string into d and e = dual(d)");
  family_split->add_option("string", cmd.string_arg)->required();

  auto* plumb = app.add_subcommand("plumb", "Plumbing graphs");
  plumb->require_subcommand(1);
  auto* plumb_form = plumb->add_subcommand("form", "Intersection form, determinant and signature");
  plumb_form->add_option("graph", cmd.file_arg, "graph file ('-' for stdin)")->required();
  auto* plumb_homology = plumb->add_subcommand("homology", "H1 of the boundary");
  plumb_homology->add_option("graph", cmd.file_arg)->required();
  auto* plumb_selfjoin = plumb->add_subcommand("selfjoin", "Identify two vertices of a tree");
  plumb_selfjoin->add_option("graph", cmd.file_arg)->required();
  plumb_selfjoin->add_option("--v1", cmd.v1)->required();
  plumb_selfjoin->add_option("--v2", cmd.v2)->required();
  plumb_selfjoin->add_option("--sign", cmd.sign_arg, "+ or -")->capture_default_str();
  auto* plumb_join = plumb->add_subcommand("join", "Identify a vertex of one graph with a vertex of another");
  plumb_join->add_option("graph", cmd.file_arg)->required();
  plumb_join->add_option("--v1", cmd.v1)->required();
  plumb_join->add_option("--with", cmd.file2_arg, "second graph file")->required();
  plumb_join->add_option("--v2", cmd.v2)->required();
  auto* plumb_monodromy = plumb->add_subcommand("monodromy", "Monodromy of a cyclic plumbing");
  plumb_monodromy->add_option("graph", cmd.file_arg)->required();
  auto* plumb_cycle = plumb->add_subcommand("cycle", "Cyclic plumbing of a word");
  plumb_cycle->add_option("word", cmd.word_arg)->required();
  auto* plumb_join_check = plumb->add_subcommand("join-check", "Join hypotheses at a vertex of a tree");
  plumb_join_check->add_option("graph", cmd.file_arg)->required();
  plumb_join_check->add_option("--vertex", cmd.v1)->required();

  auto* kirby = app.add_subcommand("kirby", "Blowups and blowdowns on cyclic chains");
  kirby->require_subcommand(1);
  auto* kirby_run = kirby->add_subcommand("run", "Apply a move script to a chain");
  kirby_run->add_option("chain", cmd.string_arg, "framings, e.g. -3,-1,-3")->required();
  kirby_run->add_option("--sign", cmd.sign_arg, "+ or -")->capture_default_str();
  kirby_run->add_option("--script", cmd.script_arg, "script file")->required();
  auto* kirby_dualize = kirby->add_subcommand("dualize", "Rewrite a family chain into (-d, d)");
  kirby_dualize->add_option("string", cmd.string_arg)->required();

  auto* obstruct = app.add_subcommand("obstruct", "Homological obstructions");
  obstruct->require_subcommand(1);
  auto* obstruct_square = obstruct->add_subcommand("square", "Square-order test on a torsion order");
  obstruct_square->add_option("n", cmd.string_arg)->required();
  auto* obstruct_attach = obstruct->add_subcommand("attach", "Attach a 2-handle along a knot class");
  obstruct_attach->add_option("matrix", cmd.file_arg)->required();
  obstruct_attach->add_option("--kappa", cmd.kappa_arg, "linking numbers, comma-separated")->required();
  obstruct_attach->add_option("--framing", cmd.framing_arg)->required();
  auto* obstruct_mu = obstruct->add_subcommand("mu", "Rohlin bit of an even unimodular form");
  obstruct_mu->add_option("matrix", cmd.file_arg)->required();

  auto* matrix = app.add_subcommand("matrix", "Integer matrix invariants");
  matrix->require_subcommand(1);
  auto* matrix_det = matrix->add_subcommand("det", "Determinant");
  matrix_det->add_option("matrix", cmd.file_arg)->required();
  auto* matrix_snf = matrix->add_subcommand("snf", "Smith normal form diagonal");
  matrix_snf->add_option("matrix", cmd.file_arg)->required();
  auto* matrix_signature = matrix->add_subcommand("signature", "Signature and inertia");
  matrix_signature->add_option("matrix", cmd.file_arg)->required();
  auto* matrix_homology = matrix->add_subcommand("homology", "Cokernel");
  matrix_homology->add_option("matrix", cmd.file_arg)->required();

  auto* ledger = app.add_subcommand("ledger", "Certification ledger");
  ledger->require_subcommand(1);
  auto* ledger_eval = ledger->add_subcommand("eval", "Evaluate a monodromy descriptor or a construction history");
  ledger_eval->add_option("descriptor", cmd.word_arg, "word or T^n / -T^n");
  ledger_eval->add_option("--history", cmd.history_arg, "construction history file");

  RunResult result;
  std::vector<std::string> shielded;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    for (auto& a : reversed) a = shield_dash(a, shielded);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage: ") + e.what() + "\n";
    return result;
  }

  for (std::string* field : {&cmd.string_arg, &cmd.word_arg, &cmd.other_arg, &cmd.sign_arg, &cmd.kappa_arg,
                             &cmd.framing_arg, &cmd.v1, &cmd.v2}) {
    *field = unshield(*field, shielded);
  }

  std::ostream& out = cmd.out;
  try {
    if (dual->parsed()) {
      out << "dual=" << format_int_string(strings::dual_string(parse_int_string(cmd.string_arg))) << "\n";
    } else if (cf->parsed()) {
      out << "cf=" << strings::cf_value(parse_int_string(cmd.string_arg)).get_str() << "\n";
    } else if (mono->parsed()) {
      const sl2::SL2Element m = sl2::parse_monodromy(cmd.word_arg);
      if (!cmd.classify && !cmd.torsion && !cmd.square_check) out << "matrix=" << sl2::format_element(m) << "\n";
      out << "trace=" << m.trace().get_str() << "\n";
      if (cmd.classify) {
        const auto c = sl2::classify(m);
        out << "kind=" << sl2::to_string(c.kind) << "\n";
        out << "sign=" << sl2::to_string(c.sign) << "\n";
      } else if (cmd.torsion) {
        out << "torsion=" << sl2::torsion_order(m).get_str() << "\n";
      } else if (cmd.square_check) {
        const auto s = sl2::square_trace_check(m);
        out << "square_torsion=" << s.value.get_str() << "\n";
        out << "is_square=" << yes_no(s.is_square) << "\n";
      }
    } else if (rotation->parsed()) {
      out << "equivalent="
          << yes_no(sl2::rotation_equivalent(parse_int_string(cmd.string_arg), parse_int_string(cmd.other_arg)))
          << "\n";
    } else if (family_gen->parsed()) {
      out << "string=" << format_int_string(strings::family_string(strings::parse_family_params(cmd.string_arg)))
          << "\n";
    } else if (family_check->parsed()) {
      const auto p = strings::recognize_family(parse_int_string(cmd.string_arg));
      if (p) {
        std::string params = strings::format_family_params(*p);
        for (char& ch : params) {
          if (ch == ';') ch = ' ';
        }
        out << "member=yes " << params << "\n";
      } else {
        out << "member=no\n";
      }
    } else if (family_split->parsed()) {
      const auto s = strings::split_relabel(parse_int_string(cmd.string_arg));
      out << "d=" << format_int_string(s.d) << "\n";
      out << "e=" << format_int_string(s.e) << "\n";
    } else if (plumb_form->parsed()) {
      const IntMatrix q = plumbing::intersection_form(plumbing::parse_graph(read_input(cmd.file_arg)));
      out << "form=" << inline_matrix(q) << "\n";
      out << "det=" << linalg::det(q).get_str() << "\n";
      out << "signature=" << linalg::signature(q) << "\n";
    } else if (plumb_homology->parsed()) {
      print_group(out, plumbing::boundary_homology(plumbing::parse_graph(read_input(cmd.file_arg))));
    } else if (plumb_selfjoin->parsed()) {
      const auto g = plumbing::parse_graph(read_input(cmd.file_arg));
      const auto joined = plumbing::self_join(g, cmd.v1, cmd.v2, parse_sign(cmd.sign_arg));
      out << "graph=" << plumbing::canonical_form(joined) << "\n";
      out << "det=" << linalg::det(plumbing::intersection_form(joined)).get_str() << "\n";
      out << "cycle_sign=" << (joined.cycle_sign() > 0 ? "+" : "-") << "\n";
    } else if (plumb_join->parsed()) {
      const auto g1 = plumbing::parse_graph(read_input(cmd.file_arg));
      const auto g2 = plumbing::parse_graph(read_input(cmd.file2_arg));
      const auto joined = plumbing::join(g1, cmd.v1, g2, cmd.v2);
      out << "graph=" << plumbing::canonical_form(joined) << "\n";
      out << "det=" << linalg::det(plumbing::intersection_form(joined)).get_str() << "\n";
    } else if (plumb_monodromy->parsed()) {
      const auto cm = plumbing::cycle_monodromy(plumbing::parse_graph(read_input(cmd.file_arg)));
      out << "matrix=" << sl2::format_element(cm.matrix) << "\n";
      out << "sign=" << (cm.sign > 0 ? "+" : "-") << "\n";
      out << "monodromy=" << sl2::format_element(cm.signed_matrix()) << "\n";
      out << "trace=" << cm.signed_matrix().trace().get_str() << "\n";
    } else if (plumb_cycle->parsed()) {
      const auto g = plumbing::cycle_plumbing_from_word(sl2::parse_word(cmd.word_arg));
      out << "graph=" << plumbing::canonical_form(g) << "\n";
      out << "det=" << linalg::det(plumbing::intersection_form(g)).get_str() << "\n";
    } else if (plumb_join_check->parsed()) {
      const auto r = plumbing::check_join_hypotheses(plumbing::parse_graph(read_input(cmd.file_arg)), cmd.v1);
      out << "boundary_s1xs2=" << yes_no(r.boundary_is_s1xs2) << "\n";
      out << "complement_qs3=" << yes_no(r.complement_is_qs3) << "\n";
      out << "homology_level_only=" << yes_no(r.homology_level_only) << "\n";
    } else if (kirby_run->parsed()) {
      kirby::ChainState state;
      state.framings = parse_int_string(cmd.string_arg).entries;
      state.eps = parse_sign(cmd.sign_arg);
      if (state.framings.empty()) throw Error(ErrorCode::chain_too_short, "chain needs at least one component");
      const auto start = kirby::chain_monodromy(state);
      const auto moves = kirby::parse_script(read_input(cmd.script_arg));
      for (std::size_t i = 0; i < moves.size(); ++i) {
        state = kirby::apply(state, moves[i]);
        out << "step=" << i + 1 << " move=" << kirby::format_move(moves[i]) << " " << kirby::format_chain(state)
            << "\n";
      }
      out << kirby::format_chain(state) << "\n";
      out << "monodromy=" << sl2::format_element(kirby::chain_monodromy(state)) << "\n";
      out << "monodromy_preserved=" << yes_no(kirby::chain_monodromy(state) == start) << "\n";
    } else if (kirby_dualize->parsed()) {
      const auto r = kirby::dualize_procedure(parse_int_string(cmd.string_arg));
      out << "d=" << format_int_string(r.d) << "\n";
      out << "start=" << format_int_string(IntString(r.start.framings)) << "\n";
      for (const auto& m : r.script) out << "move=" << kirby::format_move(m) << "\n";
      out << "terminal=" << format_int_string(IntString(r.terminal.framings)) << "\n";
      out << "terminal_sign=" << (r.terminal.eps > 0 ? "+" : "-") << "\n";
      out << "monodromy=" << sl2::format_element(kirby::chain_monodromy(r.terminal)) << "\n";
    } else if (obstruct_square->parsed()) {
      Integer n;
      if (n.set_str(cmd.string_arg, 10) != 0) throw UsageError("not an integer: '" + cmd.string_arg + "'");
      out << "square_order=" << obstruct::to_string(obstruct::square_order_obstruction(n)) << "\n";
    } else if (obstruct_attach->parsed()) {
      const auto p = obstruct::SurgeryPresentation::from_matrix(linalg::parse_matrix(read_input(cmd.file_arg)));
      const auto k = obstruct::parse_knot_class("kappa=" + cmd.kappa_arg + " framing=" + cmd.framing_arg);
      const auto [bordered, h] = obstruct::attach_two_handle(p, k);
      out << "form=" << inline_matrix(bordered.L) << "\n";
      out << "det=" << linalg::det(bordered.L).get_str() << "\n";
      print_group(out, h);
    } else if (obstruct_mu->parsed()) {
      const IntMatrix m = linalg::parse_matrix(read_input(cmd.file_arg));
      const int mu = obstruct::rohlin_mu(m);
      out << "signature=" << linalg::signature(m) << "\n";
      out << "mu=" << mu << "\n";
    } else if (matrix_det->parsed()) {
      out << "det=" << linalg::det(linalg::parse_matrix(read_input(cmd.file_arg))).get_str() << "\n";
    } else if (matrix_snf->parsed()) {
      out << "diagonal=" << join_integers(linalg::snf(linalg::parse_matrix(read_input(cmd.file_arg))).diagonal())
          << "\n";
    } else if (matrix_signature->parsed()) {
      const IntMatrix m = linalg::parse_matrix(read_input(cmd.file_arg));
      const auto in = linalg::inertia(m);
      out << "signature=" << linalg::signature(m) << "\n";
      out << "positive=" << in.positive << "\nnegative=" << in.negative << "\nzero=" << in.zero << "\n";
    } else if (matrix_homology->parsed()) {
      print_group(out, linalg::abelian_group_of(linalg::parse_matrix(read_input(cmd.file_arg))));
    } else if (ledger_eval->parsed()) {
      if (cmd.word_arg.empty() == cmd.history_arg.empty()) {
        throw UsageError("ledger eval takes exactly one of <descriptor> or --history");
      }
      ledger::Ledger book;
      if (!cmd.word_arg.empty()) {
        auto [entry, next] = ledger::ledger_evaluate(book, ledger::parse_monodromy_descriptor(cmd.word_arg));
        out << entry.report_line() << "\n";
      } else {
        for (const auto& [id, construction] : ledger::parse_history(read_input(cmd.history_arg))) {
          auto [entry, next] = ledger::ledger_evaluate(std::move(book), construction);
          book = std::move(next);
          out << "id=" << id << " " << entry.report_line() << "\n";
        }
      }
    }
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("usage: ") + e.what() + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = 1;
    result.out = "error=" + std::string(to_string(e.code())) + "\n";
    result.err = e.what() + std::string("\n");
    return result;
  }
  result.out = cmd.out.str();
  return result;
}

}  // namespace qcirc::cli
