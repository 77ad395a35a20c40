#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "deligne/groupoid.hpp"
#include "deligne/json_io.hpp"

using namespace deligne;
using nlohmann::json;

namespace {

// Bad invocation or bad input file: exit 2 instead of 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

Arrangement load_arrangement(const std::string& path) {
  try {
    return arrangement_from_json(load_json(path));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

const Chamber& select_chamber(const Arrangement& arr, const std::string& sign) {
  if (sign.empty()) return arr.chamber(0);
  try {
    return arr.chamber(SignVector::from_string(sign));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::vector<IVec>> parse_labeling(const std::string& text,
                                                int dim) {
  if (text.empty()) return std::nullopt;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid labeling JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw UsageError("labeling must be an array of rays");
  std::vector<IVec> rays;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw UsageError("labeling rays must have one entry per dimension");
    }
    IVec v(dim);
    for (int i = 0; i < dim; ++i) {
      if (!row[i].is_number_integer()) throw UsageError("labeling rays must be integers");
      v[i] = Int(row[i].get<std::int64_t>());
    }
    rays.push_back(std::move(v));
  }
  return rays;
}

Word parse_word_arg(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string word_text(const Word& w) {
  return w.empty() ? "()" : format_word(w);
}

struct Options {
  std::string input;
  std::string base;
  std::string labeling;
  std::string format = "text";
  std::size_t budget = kDefaultBudget;
  std::string from;
  std::string to;
  std::string word;
  std::string word_a;
  std::string word_b;
  int label_i = 0;
  int label_j = 0;
  bool dot = false;
};

SkeletonGraph make_skeleton(const Arrangement& arr, const Options& opt) {
  const Chamber& base = select_chamber(arr, opt.base);
  auto labeling = parse_labeling(opt.labeling, arr.dim());
  return build_skeleton(arr, base, labeling);
}

int cmd_chambers(const Arrangement& arr, const Options& opt) {
  const auto& cx = arr.chambers();
  bool with_rays = is_simplicial(arr) && arr.essential();
  if (opt.format == "json") {
    json chambers = json::array();
    for (const auto& c : cx.chambers) chambers.push_back(chamber_to_json(arr, c));
    std::cout << json{{"count", cx.chambers.size()}, {"chambers", chambers}}
              << "\n";
    return 0;
  }
  std::cout << cx.chambers.size() << " chambers\n";
  for (const auto& c : cx.chambers) {
    std::cout << c.sign.to_string();
    if (with_rays) {
      std::cout << " " << chamber_to_json(arr, c)["rays"].dump();
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_skeleton(const Arrangement& arr, const Options& opt) {
  SkeletonGraph sk = make_skeleton(arr, opt);
  std::string format = opt.dot ? "dot" : opt.format;
  if (format == "dot") {
    std::cout << export_dot(sk);
    return 0;
  }
  if (format == "json") {
    std::cout << skeleton_to_json(sk) << "\n";
    return 0;
  }
  const auto& cx = arr.chambers();
  std::cout << "base " << cx.chambers[sk.base()].sign.to_string() << "\n";
  for (const auto& a : sk.arrows()) {
    std::cout << cx.chambers[a.source].sign.to_string() << " -> "
              << cx.chambers[a.target].sign.to_string() << " s" << a.label
              << " wall " << a.wall << "\n";
  }
  return 0;
}

int cmd_atoms(const Arrangement& arr, const Options& opt) {
  SkeletonGraph sk = make_skeleton(arr, opt);
  const Chamber& from = select_chamber(arr, opt.from);
  const Chamber& to = select_chamber(arr, opt.to);
  auto atoms = enumerate_atoms(sk, from, to);
  if (opt.format == "json") {
    json words = json::array();
    for (const auto& a : atoms) words.push_back(format_word(a.word()));
    std::cout << json{{"count", atoms.size()}, {"atoms", words}} << "\n";
    return 0;
  }
  std::cout << atoms.size() << " atoms\n";
  for (const auto& a : atoms) std::cout << word_text(a.word()) << "\n";
  return 0;
}

int cmd_nf(const Arrangement& arr, const Options& opt) {
  SkeletonGraph sk = make_skeleton(arr, opt);
  Word w = parse_word_arg(opt.word);
  PositivePath p = path_from_word(sk, select_chamber(arr, opt.base), w);
  NormalForm nf = deligne_normal_form(p, opt.budget);
  if (opt.format == "json") {
    const auto& cx = arr.chambers();
    json factors = json::array();
    for (const auto& f : nf.factors) {
      factors.push_back(json{{"start", cx.chambers[f.start()].sign.to_string()},
                             {"end", cx.chambers[f.end()].sign.to_string()},
                             {"word", format_word(f.word())}});
    }
    std::cout << json{{"word", format_word(w)},
                      {"rendered", render_normal_form(nf)},
                      {"factors", factors}}
              << "\n";
    return 0;
  }
  std::cout << render_normal_form(nf) << "\n";
  return 0;
}

int cmd_equal(const Arrangement& arr, const Options& opt) {
  SkeletonGraph sk = make_skeleton(arr, opt);
  const Chamber& base = select_chamber(arr, opt.base);
  Morphism a = [&] {
    try {
      return parse_morphism(sk, base, opt.word_a);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  Morphism b = [&] {
    try {
      return parse_morphism(sk, base, opt.word_b);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  Verdict v = equal_bounded(a, b, opt.budget);
  std::string text = v == Verdict::equal      ? "equal"
                     : v == Verdict::unequal  ? "unequal"
                                              : "inconclusive";
  if (opt.format == "json") {
    std::cout << json{{"verdict", text}} << "\n";
  } else {
    std::cout << text << "\n";
  }
  return v == Verdict::inconclusive ? 3 : 0;
}

int cmd_braid(const Arrangement& arr, const Options& opt) {
  if (opt.label_i == opt.label_j) throw UsageError("labels i and j must differ");
  SkeletonGraph sk = make_skeleton(arr, opt);
  if (opt.label_i < 1 || opt.label_i > sk.labels() || opt.label_j < 1 ||
      opt.label_j > sk.labels()) {
    throw UsageError("labels must be between 1 and the arrangement rank");
  }
  const Chamber& base = select_chamber(arr, opt.base);
  BraidResult r = braid_relation(sk, base, opt.label_i, opt.label_j);
  if (opt.format == "json") {
    std::cout << json{{"m", r.m},
                      {"word_a", format_word(r.word_a)},
                      {"word_b", format_word(r.word_b)},
                      {"equivalent", r.equivalent}}
              << "\n";
    return 0;
  }
  std::cout << "m = " << r.m << "\n";
  std::cout << "a = " << format_word(r.word_a) << "\n";
  std::cout << "b = " << format_word(r.word_b) << "\n";
  std::cout << "equivalent = " << (r.equivalent ? "true" : "false") << "\n";
  return 0;
}

int cmd_gfan_export(const Arrangement& arr, const Options& opt) {
  SkeletonGraph sk = make_skeleton(arr, opt);
  const auto& cx = arr.chambers();
  if (opt.format == "json") {
    json matrices = json::array();
    for (const auto& c : cx.chambers) {
      matrices.push_back(gmatrix_to_json(g_matrix(sk, c)));
    }
    std::cout << json{{"base", sk.base()}, {"matrices", matrices}} << "\n";
    return 0;
  }
  for (const auto& c : cx.chambers) {
    std::cout << c.sign.to_string() << " "
              << gmatrix_to_json(g_matrix(sk, c))["rows"].dump() << "\n";
  }
  return 0;
}

int cmd_gfan_reconstruct(const Options& opt) {
  auto [dim, matrices] = [&] {
    try {
      return matrices_from_json(load_json(opt.input));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  Reconstruction rec = arrangement_from_g_matrices(dim, matrices);
  const auto& cx = rec.arrangement.chambers();
  if (opt.format == "json") {
    json hps = json::array();
    for (const auto& h : rec.arrangement.hyperplanes()) {
      json row = json::array();
      for (int i = 0; i < h.normal.size(); ++i) {
        row.push_back(static_cast<std::int64_t>(h.normal[i].get_si()));
      }
      hps.push_back(row);
    }
    json matched = json::array();
    for (int id : rec.matrix_chamber) {
      matched.push_back(cx.chambers[id].sign.to_string());
    }
    std::cout << json{{"hyperplanes", hps},
                      {"chambers", cx.chambers.size()},
                      {"matrix_chamber", matched},
                      {"full_cover", rec.full_cover}}
              << "\n";
    return 0;
  }
  std::cout << "hyperplanes " << arrangement_to_json(rec.arrangement)["hyperplanes"].dump()
            << "\n";
  std::cout << "chambers " << cx.chambers.size() << "\n";
  for (size_t t = 0; t < rec.matrix_chamber.size(); ++t) {
    std::cout << "matrix " << t << " -> "
              << cx.chambers[rec.matrix_chamber[t]].sign.to_string() << "\n";
  }
  std::cout << "full_cover " << (rec.full_cover ? "true" : "false") << "\n";
  return 0;
}

int cmd_verify(const Arrangement& arr, const Options& opt) {
  const Chamber& base = select_chamber(arr, opt.base);
  int failures = 0;

  auto suite = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      std::cout << "PASS " << name << "\n";
    } catch (const NotSimplicial&) {
      std::cout << "SKIP " << name << " (NotSimplicial)\n";
    } catch (const NotEssential&) {
      std::cout << "SKIP " << name << " (NotEssential)\n";
    } catch (const std::exception& e) {
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
      ++failures;
    }
  };
  auto check = [](bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
  };

  const auto& cx = arr.chambers();
  const int m = static_cast<int>(cx.chambers.size());

  suite("chamber-parity", [&] {
    check(m >= 2 && m % 2 == 0, "chamber count must be even");
    for (const auto& c : cx.chambers) antipode(arr, c);
  });

  suite("skeleton-degrees", [&] {
    SkeletonGraph sk = make_skeleton(arr, opt);
    const int n = sk.labels();
    check(static_cast<int>(sk.arrows().size()) == m * n, "arrow count");
    std::vector<int> in(m, 0);
    for (const auto& c : cx.chambers) {
      std::set<int> labels, targets;
      for (int l = 1; l <= n; ++l) {
        const Arrow& a = sk.arrow(c.id, l);
        check(a.source == c.id, "arrow source");
        labels.insert(a.label);
        targets.insert(a.target);
        ++in[a.target];
      }
      check(static_cast<int>(labels.size()) == n, "labels must partition arrows");
      check(static_cast<int>(targets.size()) == n, "arrow targets must be distinct");
    }
    for (int c = 0; c < m; ++c) check(in[c] == n, "in-degree");
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SkeletonGraph shuffled =
          build_skeleton(arr, arr.chamber(sk.base()),
                         std::optional<std::vector<IVec>>(sk.labeled_rays(sk.base())), seed);
      check(shuffled.arrows() == sk.arrows(), "arrows depend on traversal order");
      for (int c = 0; c < m; ++c) {
        check(shuffled.labeled_rays(c) == sk.labeled_rays(c),
              "labels depend on traversal order");
      }
    }
  });

  suite("atom-equivalence", [&] {
    SkeletonGraph sk = make_skeleton(arr, opt);
    for (const auto& v : cx.chambers) {
      for (const auto& w : cx.chambers) {
        auto atoms = enumerate_atoms(sk, v, w);
        check(!atoms.empty(), "chamber pair without atoms");
        EquivClass cls = equiv_class(atoms.front(), opt.budget);
        for (const auto& a : atoms) {
          check(cls.contains(a.word()), "inequivalent atoms between " +
                                            v.sign.to_string() + " and " +
                                            w.sign.to_string());
        }
      }
    }
  });

  suite("nf-oracle", [&] {
    SkeletonGraph sk = make_skeleton(arr, opt);
    const int n = sk.labels();
    for (const auto& v : cx.chambers) {
      std::vector<Word> words{{}};
      for (int len = 1; len <= 3; ++len) {
        std::vector<Word> next;
        for (const auto& w : words) {
          if (static_cast<int>(w.size()) != len - 1) continue;
          for (int l = 1; l <= n; ++l) {
            Word e = w;
            e.push_back(l);
            next.push_back(e);
          }
        }
        words.insert(words.end(), next.begin(), next.end());
      }
      for (size_t x = 0; x < words.size(); ++x) {
        PositivePath p = path_from_word(sk, v, words[x]);
        EquivClass cls = equiv_class(p, opt.budget);
        for (size_t y = x + 1; y < words.size(); ++y) {
          PositivePath q = path_from_word(sk, v, words[y]);
          if (q.end() != p.end() || q.length() != p.length()) continue;
          bool by_nf = equal_positive(p, q, opt.budget);
          check(by_nf == cls.contains(words[y]),
                "normal form disagrees with the oracle");
        }
      }
    }
  });

  suite("braid", [&] {
    SkeletonGraph sk = make_skeleton(arr, opt);
    for (int i = 1; i <= sk.labels(); ++i) {
      for (int j = i + 1; j <= sk.labels(); ++j) {
        BraidResult r = braid_relation(sk, base, i, j);
        check(r.m >= 2, "braid closure length");
        check(r.equivalent, "braid words are not equivalent");
      }
    }
  });

  suite("gfan-roundtrip", [&] {
    SkeletonGraph sk = make_skeleton(arr, opt);
    std::vector<IMat> matrices;
    for (const auto& c : cx.chambers) matrices.push_back(g_matrix(sk, c).rows);
    Reconstruction rec = arrangement_from_g_matrices(arr.dim(), matrices);
    check(rec.full_cover, "reconstruction misses chambers");
    check(rec.arrangement.size() == arr.size(), "hyperplane count changed");
    for (int i = 0; i < arr.size(); ++i) {
      bool found = false;
      for (int j = 0; j < rec.arrangement.size(); ++j) {
        if (rec.arrangement.hyperplane(j).normal == arr.hyperplane(i).normal) {
          found = true;
          break;
        }
      }
      check(found, "hyperplane lost in the round trip");
    }
    std::set<int> matched(rec.matrix_chamber.begin(), rec.matrix_chamber.end());
    check(static_cast<int>(matched.size()) == m, "chamber matching not bijective");
  });

  suite("weak-order", [&] {
    WeakOrder order = weak_order(arr, base);
    int minima = 0;
    for (const auto& c : cx.chambers) {
      if (separation(arr, base, c).size() == 0) ++minima;
    }
    check(minima == 1, "base must be the unique minimum");
    check(!order.covers.empty(), "weak order has no covers");
  });

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chamber, path, and g-vector combinatorics of simplicial hyperplane arrangements"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_budget = true) {
    cmd->add_option("input", opt.input, "arrangement JSON file")->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_budget) {
      cmd->add_option("--budget", opt.budget, "oracle class-size budget")
          ->envname("DELIGNE_BUDGET");
    }
  };
  auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base", opt.base, "base chamber sign string");
    cmd->add_option("--labeling", opt.labeling,
                    "JSON array of base rays in label order");
  };

  CLI::App* chambers = app.add_subcommand("chambers", "list the chambers");
  add_common(chambers, false);

  CLI::App* skeleton = app.add_subcommand("skeleton", "print the labeled skeleton");
  skeleton->add_option("input", opt.input, "arrangement JSON file")->required();
  skeleton->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  skeleton->add_flag("--dot", opt.dot, "shorthand for --format dot");
  add_base(skeleton);

  CLI::App* atoms = app.add_subcommand("atoms", "enumerate minimal paths");
  add_common(atoms, false);
  add_base(atoms);
  atoms->add_option("--from", opt.from, "source chamber sign")->required();
  atoms->add_option("--to", opt.to, "target chamber sign")->required();

  CLI::App* nf = app.add_subcommand("nf", "Deligne normal form of a word");
  add_common(nf);
  add_base(nf);
  nf->add_option("--word", opt.word, "path word, e.g. s1.s2.s1")->required();

  CLI::App* equal = app.add_subcommand("equal", "compare two words");
  add_common(equal);
  add_base(equal);
  equal->add_option("--word-a", opt.word_a, "first word (s3~ inverts)")->required();
  equal->add_option("--word-b", opt.word_b, "second word")->required();

  CLI::App* braid = app.add_subcommand("braid", "braid relation for two labels");
  add_common(braid);
  add_base(braid);
  braid->add_option("--i", opt.label_i, "first label")->required();
  braid->add_option("--j", opt.label_j, "second label")->required();

  CLI::App* gfan = app.add_subcommand("gfan", "g-matrix export and reconstruction");
  gfan->require_subcommand(1);
  CLI::App* gexport = gfan->add_subcommand("export", "g-matrices of all chambers");
  add_common(gexport, false);
  add_base(gexport);
  CLI::App* greconstruct =
      gfan->add_subcommand("reconstruct", "rebuild an arrangement from matrices");
  greconstruct->add_option("input", opt.input, "matrices JSON file")->required();
  greconstruct->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify);
  add_base(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (greconstruct->parsed()) return cmd_gfan_reconstruct(opt);
    Arrangement arr = load_arrangement(opt.input);
    if (chambers->parsed()) return cmd_chambers(arr, opt);
    if (skeleton->parsed()) return cmd_skeleton(arr, opt);
    if (atoms->parsed()) return cmd_atoms(arr, opt);
    if (nf->parsed()) return cmd_nf(arr, opt);
    if (equal->parsed()) return cmd_equal(arr, opt);
    if (braid->parsed()) return cmd_braid(arr, opt);
    if (gexport->parsed()) return cmd_gfan_export(arr, opt);
    if (verify->parsed()) return cmd_verify(arr, opt);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
