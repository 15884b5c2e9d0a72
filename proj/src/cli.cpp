#include "coxeter/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxeter/preproj.hpp"
#include "coxeter/weakorder.hpp"

namespace coxeter::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    require(pos == tok.size(), fail::parse, "Parse",
            "line " + std::to_string(line) + ": bad integer '" + tok + "'");
    return v;
  } catch (const error&) {
    throw;
  } catch (...) {
    raise(fail::parse, "Parse",
          "line " + std::to_string(line) + ": bad integer '" + tok + "'");
  }
}

std::string fmt_scalar(double x) {
  double r = std::round(x);
  if (std::fabs(x - r) < 1e-6)
    return std::to_string(static_cast<long long>(r));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

ordered_json json_scalar(double x) {
  double r = std::round(x);
  if (std::fabs(x - r) < 1e-6) return static_cast<long long>(r);
  return x;
}

ordered_json json_root(const RootVec& v) {
  ordered_json a = ordered_json::array();
  for (double c : v) a.push_back(json_scalar(c));
  return a;
}

std::string fmt_blocks(const CoxeterGraph& g,
                       const std::vector<TraceWord>& blocks) {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "|";
    s += format_word(g, blocks[i]);
  }
  return s;
}

}  // namespace

ParsedSystem parse_system_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<CoxEntry>> table;
  std::vector<std::vector<char>> set_flag;
  std::optional<std::vector<Vertex>> order;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "n") {
      require(n < 0, fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": duplicate n line");
      require(toks.size() == 2, fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": expected 'n <count>'");
      n = parse_int(toks[1], lineno);
      require(n >= 1 && n <= max_rank, fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": n out of range");
      table.assign(n, std::vector<CoxEntry>(n, CoxEntry::finite(2)));
      set_flag.assign(n, std::vector<char>(n, 0));
      for (int i = 0; i < n; ++i) table[i][i] = CoxEntry::finite(1);
      continue;
    }
    require(n > 0, fail::parse, "Parse",
            "line " + std::to_string(lineno) + ": 'n' must come first");

    if (head == "m") {
      require(toks.size() == 4, fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": expected 'm <i> <j> <label>'");
      int i = parse_int(toks[1], lineno), j = parse_int(toks[2], lineno);
      require(i >= 1 && i <= n && j >= 1 && j <= n && i != j, fail::parse,
              "Parse",
              "line " + std::to_string(lineno) + ": vertex pair out of range");
      CoxEntry m = CoxEntry::finite(2);
      if (toks[3] == "inf") {
        m = CoxEntry::inf();
      } else {
        int v = parse_int(toks[3], lineno);
        require(v >= 3, fail::parse, "Parse",
                "line " + std::to_string(lineno) +
                    ": label must be >= 3 or 'inf'");
        m = CoxEntry::finite(v);
      }
      require(!set_flag[i - 1][j - 1], fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": pair listed twice");
      set_flag[i - 1][j - 1] = set_flag[j - 1][i - 1] = 1;
      table[i - 1][j - 1] = table[j - 1][i - 1] = m;
      continue;
    }

    if (head == "order") {
      require(!order.has_value(), fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": duplicate order line");
      require(static_cast<int>(toks.size()) == n + 1, fail::parse, "Parse",
              "line " + std::to_string(lineno) + ": order must list " +
                  std::to_string(n) + " vertices");
      std::vector<Vertex> seq;
      for (size_t k = 1; k < toks.size(); ++k) {
        int v = parse_int(toks[k], lineno);
        require(v >= 1 && v <= n, fail::parse, "Parse",
                "line " + std::to_string(lineno) + ": vertex out of range");
        seq.push_back(v - 1);
      }
      order = std::move(seq);
      continue;
    }

    raise(fail::parse, "Parse",
          "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
  }
  require(n > 0, fail::parse, "Parse", "missing 'n' line");

  CoxeterGraph g = validate_matrix(table);
  std::optional<VertexOrder> vo;
  if (order) vo = make_order(g, *order);
  return ParsedSystem{std::move(g), std::move(vo)};
}

ParsedSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), fail::parse, "Parse", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str());
}

TraceWord parse_word(const CoxeterGraph& g, const std::string& text) {
  std::vector<Vertex> letters;
  for (const std::string& t : tokens_of(text)) {
    int v = parse_int(t, 0);
    require(v >= 1 && v <= g.rank(), fail::parse, "Parse",
            "word letter out of range: '" + t + "'");
    letters.push_back(v - 1);
  }
  return TraceWord(std::move(letters));
}

std::string format_word(const CoxeterGraph& g, const TraceWord& w) {
  TraceWord c = canonical(g, w);
  std::string s;
  for (size_t i = 0; i < c.letters().size(); ++i) {
    if (i) s += " ";
    s += std::to_string(c.letters()[i] + 1);
  }
  return s;
}

RootVec parse_root(const CoxeterGraph& g, const std::string& text) {
  auto toks = tokens_of(text);
  require(static_cast<int>(toks.size()) == g.rank(), fail::parse, "Parse",
          "root must have " + std::to_string(g.rank()) + " coordinates");
  RootVec v;
  for (const std::string& t : toks) {
    try {
      size_t pos = 0;
      v.push_back(std::stod(t, &pos));
      require(pos == t.size(), fail::parse, "Parse",
              "bad coordinate '" + t + "'");
    } catch (const error&) {
      throw;
    } catch (...) {
      raise(fail::parse, "Parse", "bad coordinate '" + t + "'");
    }
  }
  return v;
}

std::string format_root(const RootVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += fmt_scalar(v[i]);
  }
  return s;
}

namespace {

struct Report {
  bool json = false;
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json result = ordered_json::object();
  ordered_json diagnostics = ordered_json::object();
  std::vector<std::string> lines;

  void kv(const std::string& k, const std::string& v) {
    lines.push_back(k + "=" + v);
  }
  void emit(std::ostream& out) const {
    if (json) {
      ordered_json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["result"] = result;
      j["diagnostics"] = diagnostics;
      out << j.dump() << "\n";
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
  }
};

const VertexOrder& need_order(const ParsedSystem& ps) {
  require(ps.order.has_value(), fail::domain, "MissingOrder",
          "this command needs an 'order' line in the system file");
  return *ps.order;
}

std::string fmt_entry(CoxEntry e) { return e.str(); }

void cmd_validate(const ParsedSystem& ps, Report& rep) {
  const CoxeterGraph& g = ps.graph;
  rep.kv("ok", "true");
  rep.kv("n", std::to_string(g.rank()));
  std::string edges;
  ordered_json jedges = ordered_json::array();
  for (const Edge& e : g.edges()) {
    if (!edges.empty()) edges += " ";
    edges += std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1) + ":" +
             fmt_entry(e.m);
    ordered_json je;
    je["a"] = e.a + 1;
    je["b"] = e.b + 1;
    je["m"] = e.m.infinite() ? ordered_json("inf") : ordered_json(e.m.value());
    jedges.push_back(je);
  }
  rep.kv("edges", edges);
  rep.result["ok"] = true;
  rep.result["n"] = g.rank();
  rep.result["edges"] = jedges;
  if (ps.order) {
    std::string o;
    ordered_json jo = ordered_json::array();
    for (Vertex v : ps.order->seq) {
      if (!o.empty()) o += " ";
      o += std::to_string(v + 1);
      jo.push_back(v + 1);
    }
    rep.kv("order", o);
    rep.result["order"] = jo;
  }
}

void add_member_line(Report& rep, const CoxeterGraph& g,
                     const PreprojectiveRecord& rec, const char* key) {
  rep.kv(key, format_root(rec.root) + " size=" + std::to_string(rec.size) +
                  " apex=" + std::to_string(rec.apex + 1) + " word=\"" +
                  format_word(g, rec.principal.word.word) + "\"");
}

ordered_json json_record(const CoxeterGraph& g, const PreprojectiveRecord& rec) {
  ordered_json j;
  j["root"] = json_root(rec.root);
  j["size"] = rec.size;
  j["apex"] = rec.apex + 1;
  j["word"] = format_word(g, rec.principal.word.word);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "preroot: admissible words and preprojective roots of a Coxeter system.\n"
      "Words are written leftmost letter first and applied right to left:\n"
      "\"1 2 1\" applies vertex 1 first, then 2, then 1."};
  app.require_subcommand(1);

  std::string system_path, word1, word2, root1, roots_list, preset_name;
  std::vector<std::string> preset_params;
  int opt_r = 0, opt_x = 0;
  int opt_rmax = -1;
  int opt_bound = -1;
  bool json = false;

  auto add_common = [&](CLI::App* sub, bool needs_system) {
    if (needs_system)
      sub->add_option("--system", system_path, "system file")->required();
    sub->add_flag("--json", json, "emit one JSON object per run");
    return sub;
  };

  auto* c_validate = add_common(app.add_subcommand("validate", "check a system file"), true);
  auto* c_nf = add_common(app.add_subcommand("nf", "Foata normal form of a word"), true);
  c_nf->add_option("word", word1, "word literal")->required();
  auto* c_adm = add_common(app.add_subcommand("admissible", "is the word admissible for the chosen orientation"), true);
  c_adm->add_option("word", word1)->required();
  auto* c_meet = add_common(app.add_subcommand("meet", "meet of two admissible words"), true);
  c_meet->add_option("word1", word1)->required();
  c_meet->add_option("word2", word2)->required();
  auto* c_join = add_common(app.add_subcommand("join", "join of two admissible words"), true);
  c_join->add_option("word1", word1)->required();
  c_join->add_option("word2", word2)->required();
  auto* c_prin = add_common(app.add_subcommand("principal", "principal word of given size and apex"), true);
  c_prin->add_option("r", opt_r, "size >= 1")->required();
  c_prin->add_option("x", opt_x, "apex vertex, 1-based")->required();
  auto* c_proj = add_common(app.add_subcommand("projective", "projective roots, one per generator"), true);
  auto* c_pre = add_common(app.add_subcommand("preproj", "preprojective roots by size"), true);
  c_pre->add_option("--rmax", opt_rmax, "size bound (default 2n(n+1))");
  auto* c_wa = add_common(app.add_subcommand("walpha", "least admissible word negating a root"), true);
  c_wa->add_option("root", root1, "root coordinates")->required();
  c_wa->add_option("--rmax", opt_rmax, "size bound (default 2n(n+1))");
  auto* c_wp = add_common(app.add_subcommand("wpsi", "least admissible word negating a set of roots"), true);
  c_wp->add_option("roots", roots_list, "roots separated by ';'")->required();
  c_wp->add_option("--rmax", opt_rmax, "size bound (default 2n(n+1))");
  c_wp->add_option("--bound", opt_bound, "search length bound");
  auto* c_red = add_common(app.add_subcommand("reduced", "is the word reduced"), true);
  c_red->add_option("word", word1)->required();
  auto* c_wl = add_common(app.add_subcommand("weak-leq", "left weak order on the images of two words"), true);
  c_wl->add_option("word1", word1)->required();
  c_wl->add_option("word2", word2)->required();
  auto* c_fin = add_common(app.add_subcommand("finite", "probe finiteness through the simple roots"), true);
  c_fin->add_option("--rmax", opt_rmax, "size bound (default 2n(n+1))");
  auto* c_cat = add_common(app.add_subcommand("catalog", "print a preset system file"), false);
  c_cat->add_option("name", preset_name, "preset name")->required();
  c_cat->add_option("params", preset_params, "preset parameters");

  std::vector<const char*> argv;
  argv.push_back("preroot");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: Parse: " << e.what() << "\n";
      return 2;
    }

    Report rep;
    rep.json = json;

    if (app.got_subcommand(c_cat)) {
      rep.command = "catalog";
      rep.inputs["name"] = preset_name;
      rep.inputs["params"] = preset_params;
      CoxeterMatrix m = preset(preset_name, preset_params);
      const int n = m.rank();
      rep.kv("n", std::to_string(n));
      ordered_json jm = ordered_json::array();
      std::string mtext;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          CoxEntry e = m.at(i, j);
          if (!e.infinite() && e.value() == 2) continue;
          mtext += "m " + std::to_string(i + 1) + " " + std::to_string(j + 1) +
                   " " + e.str() + "\n";
          jm.push_back({i + 1, j + 1, e.str()});
        }
      // usable directly as a system file
      std::string file = "n " + std::to_string(n) + "\n" + mtext + "order";
      std::string o;
      for (int i = 1; i <= n; ++i) o += " " + std::to_string(i);
      file += o + "\n";
      if (!json) {
        out << file;
      }
      rep.result["n"] = n;
      rep.result["m"] = jm;
      rep.result["order"] = o.substr(1);
      if (json) rep.emit(out);
      return 0;
    }

    ParsedSystem ps = parse_system_file(system_path);
    const CoxeterGraph& g = ps.graph;
    rep.inputs["system"] = system_path;
    int rmax = opt_rmax > 0 ? opt_rmax : default_r_max(g.rank());

    if (app.got_subcommand(c_validate)) {
      rep.command = "validate";
      cmd_validate(ps, rep);
    } else if (app.got_subcommand(c_nf)) {
      rep.command = "nf";
      rep.inputs["word"] = word1;
      TraceWord w = parse_word(g, word1);
      FoataForm nf = normal_form(g, w);
      std::string foata;
      for (size_t i = 0; i < nf.blocks.size(); ++i) {
        if (i) foata += "|";
        for (size_t k = 0; k < nf.blocks[i].size(); ++k) {
          if (k) foata += " ";
          foata += std::to_string(nf.blocks[i][k] + 1);
        }
      }
      rep.kv("word", format_word(g, w));
      rep.kv("foata", foata);
      rep.kv("length", std::to_string(w.length()));
      rep.result["word"] = format_word(g, w);
      ordered_json jb = ordered_json::array();
      for (const auto& b : nf.blocks) {
        ordered_json one = ordered_json::array();
        for (Vertex v : b) one.push_back(v + 1);
        jb.push_back(one);
      }
      rep.result["foata"] = jb;
      rep.result["length"] = w.length();
    } else if (app.got_subcommand(c_adm)) {
      rep.command = "admissible";
      rep.inputs["word"] = word1;
      TraceWord w = parse_word(g, word1);
      bool ok = is_admissible(g, w, orientation_from_order(g, need_order(ps)));
      rep.kv("admissible", ok ? "true" : "false");
      rep.result["admissible"] = ok;
    } else if (app.got_subcommand(c_meet) || app.got_subcommand(c_join)) {
      bool is_meet = app.got_subcommand(c_meet);
      rep.command = is_meet ? "meet" : "join";
      rep.inputs["word1"] = word1;
      rep.inputs["word2"] = word2;
      Orientation ori = orientation_from_order(g, need_order(ps));
      AdmissibleWord x = admit(g, parse_word(g, word1), ori);
      AdmissibleWord y = admit(g, parse_word(g, word2), ori);
      AdmissibleWord z = is_meet ? meet(g, x, y) : join(g, x, y);
      rep.kv("word", format_word(g, z.word));
      rep.result["word"] = format_word(g, z.word);
    } else if (app.got_subcommand(c_prin)) {
      rep.command = "principal";
      rep.inputs["r"] = opt_r;
      rep.inputs["x"] = opt_x;
      require(opt_r >= 1, fail::domain, "BadParams", "size must be >= 1");
      require(opt_x >= 1 && opt_x <= g.rank(), fail::domain, "BadParams",
              "apex out of range");
      Orientation ori = orientation_from_order(g, need_order(ps));
      PrincipalWord p = principal_word(g, opt_r, opt_x - 1, ori);
      rep.kv("word", format_word(g, p.word.word));
      rep.kv("size", std::to_string(p.size));
      rep.kv("apex", std::to_string(p.apex + 1));
      rep.kv("blocks", fmt_blocks(g, p.blocks));
      rep.result["word"] = format_word(g, p.word.word);
      rep.result["size"] = p.size;
      rep.result["apex"] = p.apex + 1;
      ordered_json jb = ordered_json::array();
      for (const auto& b : p.blocks) jb.push_back(format_word(g, b));
      rep.result["blocks"] = jb;
    } else if (app.got_subcommand(c_proj)) {
      rep.command = "projective";
      CoxeterSystem sys = make_system(g, need_order(ps));
      std::vector<RootVec> pr = projective_roots(sys);
      for (Vertex s = 0; s < g.rank(); ++s) {
        rep.kv("s" + std::to_string(s + 1), format_root(pr[s]));
        rep.result["s" + std::to_string(s + 1)] = json_root(pr[s]);
      }
    } else if (app.got_subcommand(c_pre)) {
      rep.command = "preproj";
      rep.diagnostics["rmax"] = rmax;
      CoxeterSystem sys = make_system(g, need_order(ps));
      auto table = enumerate_preprojective(sys, rmax);
      ordered_json sizes = ordered_json::object();
      for (const auto& [r, recs] : table) {
        ordered_json arr = ordered_json::array();
        for (const auto& rec : recs) {
          add_member_line(rep, g, rec, "root");
          arr.push_back(json_record(g, rec));
        }
        sizes[std::to_string(r)] = arr;
      }
      rep.result["sizes"] = sizes;
    } else if (app.got_subcommand(c_wa)) {
      rep.command = "walpha";
      rep.inputs["root"] = root1;
      rep.diagnostics["rmax"] = rmax;
      CoxeterSystem sys = make_system(g, need_order(ps));
      PreprojectiveRecord rec = w_alpha(sys, parse_root(g, root1), rmax);
      rep.kv("size", std::to_string(rec.size));
      rep.kv("apex", std::to_string(rec.apex + 1));
      rep.kv("word", format_word(g, rec.principal.word.word));
      rep.result["size"] = rec.size;
      rep.result["apex"] = rec.apex + 1;
      rep.result["word"] = format_word(g, rec.principal.word.word);
    } else if (app.got_subcommand(c_wp)) {
      rep.command = "wpsi";
      rep.inputs["roots"] = roots_list;
      rep.diagnostics["rmax"] = rmax;
      CoxeterSystem sys = make_system(g, need_order(ps));
      std::vector<RootVec> roots;
      std::string piece;
      std::istringstream in(roots_list);
      while (std::getline(in, piece, ';'))
        if (!tokens_of(piece).empty()) roots.push_back(parse_root(g, piece));
      std::optional<int> bound;
      if (opt_bound > 0) bound = opt_bound;
      PsiSet psi = w_psi(sys, roots, rmax, bound);
      rep.kv("word", format_word(g, psi.w_psi.word));
      rep.kv("independent", psi.independent ? "true" : "false");
      ordered_json members = ordered_json::array();
      for (const auto& rec : psi.roots) {
        add_member_line(rep, g, rec, "member");
        members.push_back(json_record(g, rec));
      }
      rep.result["word"] = format_word(g, psi.w_psi.word);
      rep.result["independent"] = psi.independent;
      rep.result["members"] = members;
    } else if (app.got_subcommand(c_red)) {
      rep.command = "reduced";
      rep.inputs["word"] = word1;
      bool ok = is_reduced(g, form_matrix(g), parse_word(g, word1));
      rep.kv("result", ok ? "reduced" : "not-reduced");
      rep.result["result"] = ok ? "reduced" : "not-reduced";
    } else if (app.got_subcommand(c_wl)) {
      rep.command = "weak-leq";
      rep.inputs["word1"] = word1;
      rep.inputs["word2"] = word2;
      FormMatrix form = form_matrix(g);
      GroupElement u = element_of_word(form, parse_word(g, word1));
      GroupElement v = element_of_word(form, parse_word(g, word2));
      bool ok = leq_L(g, form, u, v);
      rep.kv("leq", ok ? "true" : "false");
      rep.result["leq"] = ok;
    } else if (app.got_subcommand(c_fin)) {
      rep.command = "finite";
      rep.diagnostics["rmax"] = rmax;
      CoxeterSystem sys = make_system(g, need_order(ps));
      Probe p = finiteness_probe(sys, rmax);
      TypeClass t = finite_type_oracle(g.matrix());
      rep.kv("result", p == Probe::finite ? "finite" : "unknown");
      rep.kv("oracle", t == TypeClass::finite ? "finite" : "infinite");
      rep.kv("rmax", std::to_string(rmax));
      rep.result["result"] = p == Probe::finite ? "finite" : "unknown";
      rep.result["oracle"] = t == TypeClass::finite ? "finite" : "infinite";
      rep.result["rmax"] = rmax;
    }

    rep.emit(out);
    return 0;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.category()) {
      case fail::parse:
        return 2;
      case fail::domain:
        return 3;
      case fail::numeric:
        return 4;
      case fail::bound:
        return 5;
    }
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coxeter::cli
