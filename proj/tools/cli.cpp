#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "regsg/biorder.hpp"
#include "regsg/corpus.hpp"
#include "regsg/cxn_from_ind.hpp"
#include "regsg/echain.hpp"
#include "regsg/error.hpp"
#include "regsg/ind_from_cxn.hpp"
#include "regsg/inductive_groupoid.hpp"
#include "regsg/semigroup_cxn.hpp"

namespace regsg::cli {

  using nlohmann::ordered_json;

  namespace {

    ordered_json const& field(ordered_json const& doc, char const* key, std::string const& origin) {
      auto it = doc.find(key);
      if (it == doc.end()) {
        throw Error(ErrorKind::Parse, origin + ": missing field '" + key + "'");
      }
      return *it;
    }

    std::size_t count_of(ordered_json const& v, std::string const& what, std::string const& origin) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::Parse, origin + ": " + what + " is not a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<std::vector<Element>> rows_of(ordered_json const& v, char const* key, std::string const& origin) {
      if (!v.is_array()) {
        throw Error(ErrorKind::Parse, origin + ": field '" + key + "' is not an array");
      }
      std::vector<std::vector<Element>> rows;
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::string const where = std::string("field '") + key + "' row " + std::to_string(i);
        if (!v[i].is_array()) {
          throw Error(ErrorKind::Parse, origin + ": " + where + " is not an array");
        }
        std::vector<Element> row;
        for (std::size_t j = 0; j < v[i].size(); ++j) {
          row.push_back(static_cast<Element>(count_of(v[i][j], where + " entry " + std::to_string(j), origin)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    void relabel(Report& into, Report const& from, std::string const& suite) {
      for (CheckRecord rec : from.records()) {
        rec.suite = suite;
        into.add(std::move(rec));
      }
    }

    Check iso_check(std::string const& suite, std::string const& id, FiniteSemigroup const& S, FiniteSemigroup const& T) {
      Check c(suite, id);
      c.expect(S.order() == T.order() && find_isomorphism(S, T).has_value(),
               [&] { return T.name() + " (order " + std::to_string(T.order()) + ") is not isomorphic to " + S.name(); });
      return c;
    }

    // Builds each structure at most once per run.
    struct Pipeline {
      FiniteSemigroup const&           S;
      std::optional<InductiveGroupoid> ig;
      std::optional<SemigroupCxn>      cxn;

      InductiveGroupoid const& IG() {
        if (!ig) {
          ig.emplace(S);
        }
        return *ig;
      }
      SemigroupCxn const& X() {
        if (!cxn) {
          cxn = build_GammaS(S);
        }
        return *cxn;
      }
    };

    std::string dot_header(std::string const& name) {
      return "digraph " + quote(name) + " {\n  node [shape=plaintext];\n";
    }

    std::string dot_category(FiniteSemigroup const& S, FiniteCategory const& C, std::string const& name) {
      std::ostringstream os;
      os << dot_header(name);
      for (ObjectId a = 0; a < C.object_count(); ++a) {
        os << "  n" << a << " [label=" << quote(C.label(a)) << "];\n";
      }
      for (MorphismId f = 0; f < C.morphism_count(); ++f) {
        if (f == C.identity(C.dom(f))) {
          continue;
        }
        os << "  n" << C.dom(f) << " -> n" << C.cod(f) << " [label=" << quote(S.label(C.morphism(f).carrier));
        if (C.is_inclusion(f)) {
          os << ", style=dashed";
        }
        os << "];\n";
      }
      os << "}\n";
      return os.str();
    }

    std::string dot_poset(ClassPoset const& P, std::string const& name) {
      std::ostringstream os;
      os << dot_header(name);
      for (std::uint32_t a = 0; a < P.size(); ++a) {
        os << "  n" << a << " [label=" << quote(P.labels[a]) << "];\n";
      }
      for (std::uint32_t a = 0; a < P.size(); ++a) {
        for (std::uint32_t b = 0; b < P.size(); ++b) {
          if (a == b || !P.leq(a, b)) {
            continue;
          }
          bool covers = true;
          for (std::uint32_t c = 0; c < P.size() && covers; ++c) {
            covers = c == a || c == b || !P.leq(a, c) || !P.leq(c, b);
          }
          if (covers) {
            os << "  n" << a << " -> n" << b << ";\n";
          }
        }
      }
      os << "}\n";
      return os.str();
    }

    void print_report(std::ostream& out, std::string const& name, Report const& r) {
      for (auto const& rec : r.records()) {
        out << "  " << (rec.status == Status::Fail ? "FAIL" : to_string(rec.status)) << "  " << rec.suite << "  "
            << rec.check << "  (" << rec.checked << " checked)";
        if (rec.status != Status::Pass && !rec.witness.empty()) {
          out << "  " << rec.witness;
        }
        out << "\n";
      }
      out << name << ": " << r.records().size() << " checks, " << r.failures() << " failed\n";
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path);
      if (!f) {
        throw Error(ErrorKind::Parse, "cannot write " + path);
      }
      f << text;
    }

    FiniteSemigroup load(RunConfig const& config) {
      if (config.corpus.empty() == config.input.empty()) {
        throw Error(ErrorKind::Parse, "give exactly one of --corpus and --input");
      }
      if (!config.corpus.empty()) {
        return corpus::by_name(config.corpus);
      }
      return parse_semigroup(config.input, config.format);
    }

    ordered_json entry(FiniteSemigroup const& S, Report const& r) {
      ordered_json j;
      j["name"]   = S.name();
      j["order"]  = S.order();
      j["ok"]     = r.ok();
      j["checks"] = to_json(r);
      return j;
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"green", "biorder", "echain", "igroupoid",
                                                "cxn", "ind-from-cxn", "cxn-from-ind"};
    return names;
  }

  std::string resolve_suite(std::string const& name) {
    if (name == "section3") {
      return "ind-from-cxn";
    }
    if (name == "section4") {
      return "cxn-from-ind";
    }
    auto const& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorKind::Parse, "unknown suite '" + name + "'");
    }
    return name;
  }

  FiniteSemigroup parse_semigroup_text(std::string const& text, std::string const& format, std::string const& origin) {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorKind::Parse, origin + ": " + e.what());
    }
    if (!doc.is_object()) {
      throw Error(ErrorKind::Parse, origin + ": expected an object at the top level");
    }
    std::string name = origin;
    if (auto it = doc.find("name"); it != doc.end()) {
      if (!it->is_string()) {
        throw Error(ErrorKind::Parse, origin + ": field 'name' is not a string");
      }
      name = it->get<std::string>();
    }
    if (format == "cayley") {
      std::size_t const order = count_of(field(doc, "order", origin), "field 'order'", origin);
      auto              table = rows_of(field(doc, "table", origin), "table", origin);
      if (table.size() != order) {
        throw Error(ErrorKind::BadIndex, origin + ": field 'order' is " + std::to_string(order) + " but 'table' has "
                                             + std::to_string(table.size()) + " rows");
      }
      std::vector<std::string> labels;
      if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != order
            || !std::all_of(it->begin(), it->end(), [](auto const& v) { return v.is_string(); })) {
          throw Error(ErrorKind::Parse, origin + ": field 'labels' must hold one string per element");
        }
        labels = it->get<std::vector<std::string>>();
      }
      return from_cayley(table, name, labels);
    }
    if (format == "transformations") {
      std::size_t const degree = count_of(field(doc, "degree", origin), "field 'degree'", origin);
      return from_generators(degree, rows_of(field(doc, "generators", origin), "generators", origin), name);
    }
    throw Error(ErrorKind::Parse, "unknown format '" + format + "'");
  }

  FiniteSemigroup parse_semigroup(std::string const& path, std::string const& format) {
    std::ifstream f(path);
    if (!f) {
      throw Error(ErrorKind::Parse, "cannot read " + path);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_semigroup_text(buf.str(), format, path);
  }

  ordered_json analyze(FiniteSemigroup const& S) {
    GreenData const g = green(S);
    ordered_json    j;
    j["name"]    = S.name();
    j["order"]   = S.order();
    j["regular"] = is_regular(S);
    std::vector<std::string> idem;
    for (Element e : g.idempotents) {
      idem.push_back(S.label(e));
    }
    j["idempotents"] = idem;
    j["classes"]     = {{"L", g.class_count(g.lclass)},
                        {"R", g.class_count(g.rclass)},
                        {"H", g.class_count(g.hclass)},
                        {"D", g.class_count(g.dclass)}};
    if (!is_regular(S)) {
      return j;
    }
    InductiveGroupoid const IG(S);
    BiorderedSet const&     E = IG.biorder();
    SemigroupCxn const      X = build_GammaS(S);
    j["biorder"]              = {{"vertices", E.size()},
                                 {"e_squares", e_squares(E).size()},
                                 {"singular_squares", singular_squares(E).size()}};
    j["groupoid"]             = {{"morphisms", IG.morphisms().size()},
                                 {"p_classes", p_classes(IG.groupoid()).representatives.size()}};
    j["categories"]           = {{"LS_objects", X.LS().object_count()},
                                 {"LS_morphisms", X.LS().morphism_count()},
                                 {"RS_objects", X.RS().object_count()},
                                 {"RS_morphisms", X.RS().morphism_count()},
                                 {"linked_pairs", X.X.linked().size()}};
    return j;
  }

  Report run_suites(FiniteSemigroup const& S, std::vector<std::string> const& suites, std::size_t max_chain_length) {
    std::vector<std::string> chosen;
    for (auto const& s : suites) {
      chosen.push_back(resolve_suite(s));
    }
    if (chosen.empty()) {
      chosen = suite_names();
    }
    Pipeline P{S, {}, {}};
    Report   out;
    for (auto const& name : suite_names()) {
      if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) {
        continue;
      }
      Report r;
      if (name == "green") {
        r = verify_green(S, green(S));
      } else if (name == "biorder") {
        r = verify_biorder(P.IG().biorder());
      } else if (name == "echain") {
        r = verify_echain_groupoid(P.IG().biorder(), max_chain_length);
      } else if (name == "igroupoid") {
        OrderedGroupoid const& G = P.IG().groupoid();
        r.merge(verify_ordered_axioms(G));
        r.merge(verify_inductive_axioms(G, max_chain_length));
        PClasses const pc = p_classes(G);
        r.merge(pc.report);
        r.merge(verify_pseudo_product(G, pc));
        iso_check(name, "reconstruction", S, reconstruct_semigroup(G, pc, P.IG().class_labels(pc))).into(r);
      } else if (name == "cxn") {
        r = verify_semigroup_cxn(P.X());
      } else if (name == "ind-from-cxn") {
        GammaGroupoid const G = build_G_Gamma(P.X());
        r                     = build_Phi(G, P.IG(), max_chain_length).report;
      } else if (name == "cxn-from-ind") {
        GroupoidCxn const     X  = build_GammaG(P.IG());
        CategoryFunctor const FL = functor_frakL(X, P.X());
        CategoryFunctor const FR = functor_frakR(X, P.X());
        r.merge(verify_groupoid_cxn(X));
        r.merge(verify_frak_well_defined(X, P.X(), FL, FR));
        r.merge(verify_cxn_isomorphism(X, P.X(), FL, FR));
      }
      relabel(out, r, name);
    }
    return out;
  }

  Report roundtrip(FiniteSemigroup const& S) {
    Report                  r;
    InductiveGroupoid const IG(S);
    PClasses const          pc = p_classes(IG.groupoid());
    iso_check("roundtrip", "from-inductive-groupoid", S,
              reconstruct_semigroup(IG.groupoid(), pc, IG.class_labels(pc)))
        .into(r);
    SemigroupCxn const X = build_GammaS(S);
    iso_check("roundtrip", "from-cross-connection", S, build_S_Gamma(X).semigroup).into(r);
    GroupoidCxn const                              Y = build_GammaG(IG);
    std::vector<std::pair<NormalCone, NormalCone>> pairs;
    for (Element a = 0; a < S.order(); ++a) {
      pairs.emplace_back(cone_rx(Y.left, IG, a), cone_lx(Y.right, IG, a));
    }
    iso_check("roundtrip", "from-groupoid-cross-connection", S, linked_pair_semigroup(Y.X, pairs).semigroup).into(r);
    return r;
  }

  std::vector<std::string> const& graph_names() {
    static std::vector<std::string> const names{"biorder", "groupoid", "gamma-groupoid", "poset-l", "poset-r",
                                                "ls",      "rs",       "lg",             "rg"};
    return names;
  }

  std::string export_dot(FiniteSemigroup const& S, std::string const& graph) {
    auto const& names = graph_names();
    if (std::find(names.begin(), names.end(), graph) == names.end()) {
      throw Error(ErrorKind::Parse, "unknown graph '" + graph + "'");
    }
    std::string const name = S.name() + " " + graph;
    if (graph == "ls" || graph == "rs") {
      SemigroupCxn const X = build_GammaS(S);
      return dot_category(S, graph == "ls" ? X.LS() : X.RS(), name);
    }
    InductiveGroupoid const IG(S);
    BiorderedSet const&     E = IG.biorder();
    if (graph == "poset-l" || graph == "poset-r") {
      return dot_poset(graph == "poset-l" ? l_class_poset(E) : r_class_poset(E), name);
    }
    if (graph == "lg" || graph == "rg") {
      GroupoidCxn const X = build_GammaG(IG);
      return dot_category(S, graph == "lg" ? X.LG() : X.RG(), name);
    }
    std::ostringstream os;
    os << dot_header(name);
    if (graph == "gamma-groupoid") {
      SemigroupCxn const  X = build_GammaS(S);
      GammaGroupoid const G = build_G_Gamma(X);
      for (Vertex v = 0; v < G.objects.size(); ++v) {
        auto [c, d] = X.X.linked()[v];
        os << "  n" << v << " [label=" << quote("(" + X.LS().label(c) + ", " + X.RS().label(d) + ")") << "];\n";
      }
      for (auto const& m : G.morphisms) {
        os << "  n" << m.dom << " -> n" << m.cod
           << " [label=" << quote("(rho_" + S.label(m.x) + ", lambda_" + S.label(m.x_prime) + ")") << "];\n";
      }
      os << "}\n";
      return os.str();
    }
    // Nodes in element order.
    std::vector<Vertex> order(E.size());
    for (Vertex v = 0; v < E.size(); ++v) {
      order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return E.element(a) < E.element(b); });
    for (Vertex v : order) {
      os << "  e" << E.element(v) << " [label=" << quote(E.label(v)) << "];\n";
    }
    if (graph == "groupoid") {
      for (auto const& m : IG.morphisms()) {
        os << "  e" << IG.domain(m) << " -> e" << IG.codomain(m)
           << " [label=" << quote("(" + S.label(m.x) + ", " + S.label(m.x_prime) + ")") << "];\n";
      }
    } else {
      // R-related pairs run horizontally, L-related pairs vertically.
      for (Vertex a : order) {
        for (Vertex b : order) {
          if (a == b) {
            continue;
          }
          std::string const edge = "  e" + std::to_string(E.element(a)) + " -> e" + std::to_string(E.element(b));
          if (E.R(a, b)) {
            os << edge << " [label=\"R\", constraint=false];\n";
          }
          if (E.L(a, b)) {
            os << edge << " [label=\"L\"];\n";
          }
          if (E.omega(a, b) && !E.R(a, b) && !E.L(a, b)) {
            os << edge << " [label=\"w\", style=dotted];\n";
          }
        }
      }
    }
    os << "}\n";
    return os.str();
  }

  ordered_json to_json(Report const& report) {
    ordered_json out = ordered_json::array();
    for (auto const& rec : report.records()) {
      out.push_back({{"suite", rec.suite},
                     {"check", rec.check},
                     {"status", to_string(rec.status)},
                     {"checked", rec.checked},
                     {"violations", rec.violations},
                     {"witness", rec.witness}});
    }
    return out;
  }

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      ordered_json doc;
      doc["command"] = config.command;
      bool ok        = true;

      if (config.command == "export-dot") {
        std::string const dot = export_dot(load(config), config.graph);
        if (config.out.empty()) {
          out << dot;
        } else {
          write_file(config.out, dot);
        }
        return kPass;
      }

      if (config.command == "analyze") {
        FiniteSemigroup const S = load(config);
        doc["semigroups"]       = ordered_json::array({analyze(S)});
        out << doc["semigroups"][0].dump(2) << "\n";
      } else if (config.command == "verify" || config.command == "roundtrip") {
        FiniteSemigroup const S = load(config);
        Report const r = config.command == "verify" ? run_suites(S, config.suites, config.max_chain_length) : roundtrip(S);
        ok             = r.ok();
        out << S.name() << " (order " << S.order() << ")\n";
        print_report(out, S.name(), r);
        doc["semigroups"] = ordered_json::array({entry(S, r)});
      } else if (config.command == "corpus") {
        doc["semigroups"] = ordered_json::array();
        for (auto const& name : corpus::names()) {
          FiniteSemigroup const S = corpus::by_name(name);
          Report                r = run_suites(S, config.suites, config.max_chain_length);
          r.merge(roundtrip(S));
          ok = ok && r.ok();
          out << name << " (order " << S.order() << ")\n";
          print_report(out, name, r);
          doc["semigroups"].push_back(entry(S, r));
        }
      } else {
        throw Error(ErrorKind::Parse, "unknown command '" + config.command + "'");
      }
      doc["ok"] = ok;
      if (!config.out.empty()) {
        write_file(config.out, doc.dump(2) + "\n");
      }
      return ok ? kPass : kFail;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

  int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular semigroups through inductive groupoids and cross-connections", "regsg"};
    app.require_subcommand(1);
    RunConfig config;

    auto source = [&](CLI::App* sub) {
      sub->add_option("--corpus", config.corpus, "Builtin semigroup")
          ->check(CLI::IsMember(corpus::names()));
      sub->add_option("--input", config.input, "Semigroup file");
      sub->add_option("--format", config.format, "Input format")
          ->check(CLI::IsMember({"cayley", "transformations"}));
    };
    auto checks = [&](CLI::App* sub) {
      sub->add_option("--suite", config.suites, "Suites to run (default all)");
      sub->add_option("--max-chain-length", config.max_chain_length, "Largest E-chain evaluated, in vertices")
          ->check(CLI::PositiveNumber);
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Summarise a semigroup");
    source(analyze_cmd);
    analyze_cmd->add_option("--out", config.out, "JSON report");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    source(verify_cmd);
    checks(verify_cmd);
    verify_cmd->add_option("--out", config.out, "JSON report");

    CLI::App* roundtrip_cmd = app.add_subcommand("roundtrip", "Rebuild the semigroup three ways");
    source(roundtrip_cmd);
    roundtrip_cmd->add_option("--out", config.out, "JSON report");

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "Write a graph in DOT");
    source(dot_cmd);
    dot_cmd->add_option("--graph", config.graph, "Structure to draw")->check(CLI::IsMember(graph_names()));
    dot_cmd->add_option("--out", config.out, "DOT file (default stdout)");

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "Run every suite and round trip on the builtins");
    checks(corpus_cmd);
    corpus_cmd->add_option("--out", config.out, "JSON report");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return kPass;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kInputError;
    }
    config.command = app.get_subcommands().front()->get_name();
    return run(config, out, err);
  }

}  // namespace regsg::cli
