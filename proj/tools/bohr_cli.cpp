// bohr: batch front end over JSON files.
//
//   bohr poset build --seeds <file> -o <file>
//   bohr heyting --op {meet|join|implies|neg|notnot} --sigma <file> [--sigma2 <file>] --poset <file>
//   bohr gelfand --observable <file> --context <idx> --open <file> --poset <file>
//   bohr pair --state <file> --sigma <file> --poset <file>
//   bohr ks check <file>
//   bohr enum-young --n <int> --k <int>
//   bohr points --poset <file> --cap <int>
//
// Exit status: 0 success, 1 domain error, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bohr/bohr.hpp"
#include "bohr/io.hpp"

namespace {

using bohr::io::json;

struct Options {
  std::string output;
  bool table = false;

  std::string seeds;
  std::string op;
  std::string sigma;
  std::string sigma2;
  std::string poset;
  std::string observable;
  std::size_t context = 0;
  std::optional<std::size_t> above;
  std::string open;
  std::string state;
  std::string rayset;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> cap;
};

std::size_t effective_cap(const Options& opt) {
  if (opt.cap) {
    if (*opt.cap < 1) throw bohr::ParseError("--cap must be at least 1");
    return *opt.cap;
  }
  if (const char* env = std::getenv("BOHR_CAP")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 1) throw bohr::ParseError("BOHR_CAP must be a positive integer");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw bohr::ParseError("BOHR_CAP must be a positive integer");
    }
  }
  return bohr::kDefaultFrameCap;
}

class Emitter {
 public:
  explicit Emitter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw bohr::ParseError("cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

bohr::PosetPtr load_poset(const std::string& path) {
  return std::make_shared<const bohr::ContextPoset>(bohr::io::poset_from_json(bohr::io::read_file(path)));
}

std::string mask_string(std::uint64_t mask, std::size_t atoms) {
  std::string s;
  for (std::size_t a = 0; a < atoms; ++a) s += (mask >> a & 1U) ? '1' : '0';
  return s;
}

json partition_json(const bohr::Context& c) { return bohr::partition_type(c).parts; }

int run_poset_build(const Options& opt) {
  const auto seeds = bohr::io::contexts_from_json(bohr::io::read_file(opt.seeds));
  const json raw = bohr::io::read_file(opt.seeds);
  std::size_t n = 0;
  if (!seeds.empty())
    n = seeds.front().dim();
  else if (raw.is_object() && raw.contains("n"))
    n = bohr::io::to_index(raw.at("n"));
  else
    throw bohr::ParseError("empty seed list needs an 'n' field");
  const auto poset = bohr::build_poset(seeds, n);
  Emitter em(opt.output);
  if (opt.table) {
    for (std::size_t i = 0; i < poset.size(); ++i) {
      em.out() << std::setw(4) << i << "  type " << bohr::partition_type(poset.context(i)) << "  above:";
      for (auto j : poset.up(i))
        if (j != i) em.out() << ' ' << j;
      em.out() << '\n';
    }
  } else {
    em.out() << bohr::io::poset_to_json(poset).dump(2) << '\n';
  }
  return 0;
}

int run_heyting(const Options& opt) {
  const auto poset = load_poset(opt.poset);
  const auto s = bohr::io::sigma_from_json(bohr::io::read_file(opt.sigma), poset);
  auto second = [&]() {
    if (opt.sigma2.empty()) throw bohr::ParseError("--op " + opt.op + " needs --sigma2");
    return bohr::io::sigma_from_json(bohr::io::read_file(opt.sigma2), poset);
  };
  std::optional<bohr::SigmaOpen> r;
  if (opt.op == "meet")
    r = bohr::meet(s, second());
  else if (opt.op == "join")
    r = bohr::join(s, second());
  else if (opt.op == "implies")
    r = bohr::heyting_implies(s, second());
  else if (opt.op == "neg")
    r = bohr::heyting_neg(s);
  else if (opt.op == "notnot")
    r = bohr::double_neg(s);
  else
    throw bohr::ParseError("unknown op '" + opt.op + "'");

  Emitter em(opt.output);
  if (opt.table) {
    em.out() << "op " << opt.op << "  valid " << (r->in_range() && r->monotone() ? "yes" : "no") << '\n';
    em.out() << "ctx  type       mask      value\n";
    for (std::size_t c = 0; c < poset->size(); ++c) {
      const auto& ctx = poset->context(c);
      std::ostringstream type;
      type << bohr::partition_type(ctx);
      const std::uint64_t m = r->mask(c);
      em.out() << std::left << std::setw(5) << c << std::setw(11) << type.str() << std::setw(10)
               << mask_string(m, ctx.size()) << (m == ctx.full_mask() ? "1" : m == 0 ? "0" : "partial") << '\n';
    }
    return 0;
  }
  json values = json::array();
  for (std::size_t c = 0; c < poset->size(); ++c) {
    const auto& ctx = poset->context(c);
    const std::uint64_t m = r->mask(c);
    values.push_back({{"context", c},
                      {"type", partition_json(ctx)},
                      {"value", m == ctx.full_mask() ? "1" : m == 0 ? "0" : "partial"}});
  }
  json out = {{"op", opt.op},
              {"result", bohr::io::sigma_to_json(*r, opt.poset)},
              {"validity", {{"in_range", r->in_range()}, {"monotone", r->monotone()}}},
              {"values", std::move(values)}};
  em.out() << out.dump(2) << '\n';
  return 0;
}

int run_gelfand(const Options& opt) {
  const auto poset = load_poset(opt.poset);
  json raw = bohr::io::read_file(opt.observable);
  const bohr::CMatrix a = bohr::io::matrix_from_json(raw.contains("matrix") ? raw.at("matrix") : raw);
  const auto u = bohr::io::open_from_json(bohr::io::read_file(opt.open));
  if (opt.context >= poset->size()) throw bohr::DomainError("context index outside the poset");
  const std::size_t d = opt.above.value_or(opt.context);
  const auto& ctx = poset->context(opt.context);
  const auto eigen = bohr::eigenvalues_in(a, ctx);
  const auto support = bohr::gelfand_support(eigen, u);
  const auto transform = bohr::bohrified_transform(a, opt.context, d, u, poset);

  Emitter em(opt.output);
  if (opt.table) {
    em.out() << "atom  eigenvalue  in U\n";
    for (std::size_t i = 0; i < eigen.size(); ++i)
      em.out() << std::left << std::setw(6) << i << std::setw(12) << bohr::to_string(eigen[i])
               << (support.bits[i] ? "yes" : "no") << '\n';
    return 0;
  }
  json ev = json::array();
  for (const auto& e : eigen) ev.push_back(bohr::to_string(e));
  json bits = json::array();
  for (bool b : support.bits) bits.push_back(b ? 1 : 0);
  json out = {{"context", opt.context},
              {"above", d},
              {"open", bohr::io::open_to_json(u)},
              {"eigenvalues", std::move(ev)},
              {"support", std::move(bits)},
              {"projection", bohr::io::matrix_to_json(ctx.projection(support.index()))},
              {"transform", bohr::io::sigma_to_json(transform, opt.poset)}};
  em.out() << out.dump(2) << '\n';
  return 0;
}

int run_pair(const Options& opt) {
  const auto poset = load_poset(opt.poset);
  const auto s = bohr::io::sigma_from_json(bohr::io::read_file(opt.sigma), poset);
  const auto psi = bohr::io::state_from_json(bohr::io::read_file(opt.state));
  const auto upper = bohr::pairing(psi, s);
  const auto mu = bohr::measure_component(psi, s, 0);

  Emitter em(opt.output);
  if (opt.table) {
    em.out() << "ctx  mu        in pairing\n";
    for (const auto& [c, v] : mu.values)
      em.out() << std::left << std::setw(5) << c << std::setw(10) << bohr::to_string(v)
               << (upper.contains(c) ? "yes" : "no") << '\n';
    return 0;
  }
  json m = json::object();
  for (const auto& [c, v] : mu.values) m[std::to_string(c)] = bohr::to_string(v);
  json out = {{"upper_set", upper.indices()}, {"mu", std::move(m)}};
  em.out() << out.dump(2) << '\n';
  return 0;
}

int run_ks_check(const Options& opt) {
  const auto rs = bohr::io::rayset_from_json(bohr::io::read_file(opt.rayset));
  const auto res = bohr::valuation_search(rs);
  Emitter em(opt.output);
  if (opt.table) {
    if (res.valuation) {
      em.out() << "SAT\n";
      for (auto v : res.valuation->values) em.out() << int(v);
      em.out() << '\n';
    } else {
      em.out() << "UNSAT\nnodes " << res.nodes << '\n';
    }
    return 0;
  }
  json out = {{"result", res.valuation ? "SAT" : "UNSAT"}, {"nodes", res.nodes}};
  if (res.valuation) out["assignment"] = res.valuation->values;
  em.out() << out.dump(2) << '\n';
  return 0;
}

int run_enum_young(const Options& opt) {
  json out = json::array();
  for (const auto& t : bohr::enumerate_young(opt.k, opt.n)) out.push_back(t.parts);
  Emitter em(opt.output);
  if (opt.table) {
    for (const auto& t : out) {
      for (std::size_t i = 0; i < t.size(); ++i) em.out() << (i ? " " : "") << t[i].get<std::size_t>();
      em.out() << '\n';
    }
    return 0;
  }
  em.out() << out.dump() << '\n';
  return 0;
}

int run_points(const Options& opt) {
  const auto poset = load_poset(opt.poset);
  const std::size_t cap = effective_cap(opt);
  const auto frame = bohr::enumerate_frame(poset, cap);
  std::vector<bohr::FramePoint> points;
  for (const auto& p : frame)
    if (bohr::FramePoint::is_point(p, frame)) points.emplace_back(p, frame);
  Emitter em(opt.output);
  if (opt.table) {
    em.out() << "frame size " << frame.size() << ", points " << points.size() << '\n';
    for (const auto& p : points) {
      for (std::size_t c = 0; c < poset->size(); ++c)
        em.out() << (c ? " " : "") << mask_string(p.element().mask(c), poset->context(c).size());
      em.out() << '\n';
    }
    return 0;
  }
  json pts = json::array();
  for (const auto& p : points) pts.push_back(bohr::io::sigma_to_json(p.element(), opt.poset));
  json out = {{"frame_size", frame.size()}, {"points", std::move(pts)}};
  em.out() << out.dump(2) << '\n';
  return 0;
}

void report(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intuitionistic quantum logic of n-level systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("-o,--output", opt.output, "Write output to this file instead of stdout");
  app.add_flag("--table", opt.table, "Aligned table instead of JSON");

  auto* poset = app.add_subcommand("poset", "Context posets");
  poset->require_subcommand(1);
  auto* build = poset->add_subcommand("build", "Close seed contexts under intersection and add C·1");
  build->add_option("--seeds", opt.seeds)->required();

  auto* heyting = app.add_subcommand("heyting", "Heyting operations on O(Sigma)");
  heyting->add_option("--op", opt.op)->required()->check(CLI::IsMember({"meet", "join", "implies", "neg", "notnot"}));
  heyting->add_option("--sigma", opt.sigma)->required();
  heyting->add_option("--sigma2", opt.sigma2);
  heyting->add_option("--poset", opt.poset)->required();

  auto* gelfand = app.add_subcommand("gelfand", "Spectral projection [a in U] and its Bohrified transform");
  gelfand->add_option("--observable", opt.observable)->required();
  gelfand->add_option("--context", opt.context)->required();
  gelfand->add_option("--above", opt.above, "Context D containing the chosen one (default: itself)");
  gelfand->add_option("--open", opt.open)->required();
  gelfand->add_option("--poset", opt.poset)->required();

  auto* pair = app.add_subcommand("pair", "State-proposition pairing");
  pair->add_option("--state", opt.state)->required();
  pair->add_option("--sigma", opt.sigma)->required();
  pair->add_option("--poset", opt.poset)->required();

  auto* ks = app.add_subcommand("ks", "Kochen-Specker valuations");
  ks->require_subcommand(1);
  auto* check = ks->add_subcommand("check", "Search for a noncontextual valuation");
  check->add_option("file", opt.rayset)->required();

  auto* young = app.add_subcommand("enum-young", "Young tableaux Y(k, n)");
  young->add_option("--n", opt.n)->required();
  young->add_option("--k", opt.k)->required();

  auto* points = app.add_subcommand("points", "Points of the finite frame");
  points->add_option("--poset", opt.poset)->required();
  points->add_option("--cap", opt.cap);

  for (auto* sub : {build, heyting, gelfand, pair, check, young, points}) {
    sub->add_option("-o,--output", opt.output, "Write output to this file instead of stdout");
    sub->add_flag("--table", opt.table, "Aligned table instead of JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return 2;
  }

  try {
    if (*build) return run_poset_build(opt);
    if (*heyting) return run_heyting(opt);
    if (*gelfand) return run_gelfand(opt);
    if (*pair) return run_pair(opt);
    if (*check) return run_ks_check(opt);
    if (*young) return run_enum_young(opt);
    if (*points) return run_points(opt);
  } catch (const bohr::ParseError& e) {
    report("parse", e.what());
    return 2;
  } catch (const bohr::DomainError& e) {
    report("domain", e.what());
    return 1;
  } catch (const std::exception& e) {
    report("parse", e.what());
    return 2;
  }
  return 2;
}
