// cohn: command-line front end for the commuting-matrix module library.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohn/census.hpp"
#include "cohn/cycle.hpp"
#include "cohn/error.hpp"
#include "cohn/io.hpp"
#include "cohn/isom.hpp"
#include "cohn/quot.hpp"
#include "cohn/sampler.hpp"
#include "cohn/simd/fp_kernels.hpp"
#include "cohn/tuple.hpp"

namespace {

using namespace cohn;
using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kOk = 0, kDomain = 1, kUsage = 2, kInternal = 3 };

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool pretty = false;
  bool timing = false;
  std::string isa = "auto";
  RunConfig config;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path, {{"path", path}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModuleDocument load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (Error& e) {
    nlohmann::json detail = e.detail();
    detail["path"] = path;
    throw Error(e.code(), path + ": " + e.what(), std::move(detail));
  }
}

CommutingTuple load_tuple(const std::string& path) { return document_tuple(load(path)); }
FramedModule load_framed(const std::string& path) { return document_framed(load(path)); }

ojson mats_json(const CommutingTuple& t) {
  ojson out = ojson::array();
  for (const auto& m : t.mats()) out.push_back(ojson(matrix_json(m)));
  return out;
}

ojson point_json(const ClosedPoint& p) {
  ojson out = ojson::array();
  for (const auto& c : p.coords) out.push_back(c.to_string());
  return out;
}

ojson cycle_json(const Cycle& c) {
  ojson out = ojson::array();
  for (const auto& e : c.entries()) out.push_back({{"point", point_json(e.point)}, {"mult", e.multiplicity}});
  return out;
}

ojson rational_json(const mpq_class& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

class App {
 public:
  int run(int argc, char** argv);

 private:
  void emit(ojson report) const {
    report["provenance"] = {{"tool", "cohn"}, {"version", kVersion}, {"seed", g_.config.seed},
                            {"config", ojson(config_json(g_.config))}};
    std::cout << (g_.pretty ? report.dump(2) : report.dump()) << "\n";
  }
  void emit_doc(const ModuleDocument& doc) const { std::cout << emit_document(doc); }

  IsomOptions isom_options() const {
    IsomOptions o;
    o.grid_budget = g_.config.grid_budget;
    o.seed = g_.config.seed;
    o.cycle = cycle_options();
    return o;
  }
  CycleOptions cycle_options() const { return CycleOptions{g_.config.genericity_budget}; }

  void setup_config() {
    if (!g_.config_path.empty()) g_.config = parse_config(read_file(g_.config_path));
    if (g_.seed) g_.config.seed = *g_.seed;
    if (g_.isa == "scalar")
      simd::set_active_isa(simd::Isa::Scalar);
    else if (g_.isa == "avx2")
      simd::set_active_isa(simd::Isa::Avx2);
  }

  void add_commands(CLI::App& app);

  Globals g_;
  // Subcommand arguments.
  std::string file_a_, file_b_;
  std::string by_, cells_, rows_, coeffs_, field_ = "Q";
  bool local_ = false;
  std::size_t n_ = 1, d_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::string> filters_, relations_;
  bool reps_ = false;
};

void App::add_commands(CLI::App& app) {
  auto one_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file_a_, "module document")->required()->check(CLI::ExistingFile);
    return sub;
  };
  auto two_files = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("a", file_a_, "first module document")->required()->check(CLI::ExistingFile);
    sub->add_option("b", file_b_, "second module document")->required()->check(CLI::ExistingFile);
    return sub;
  };

  one_file("validate", "check a module document")->callback([&] {
    const ModuleDocument doc = load(file_a_);
    ojson r = {{"valid", true}, {"field", doc.field.name()}, {"n", doc.n}, {"d", doc.d}};
    if (doc.frame) {
      const FramedModule f = document_framed(doc);
      r["r"] = f.r();
    } else {
      document_tuple(doc);
    }
    emit(r);
  });

  one_file("cycle", "support cycle of a split module")->callback([&] {
    const Cycle c = cycle(load_tuple(file_a_), cycle_options());
    emit({{"cycle", cycle_json(c)}, {"stratum", stratum(c).alpha}});
  });

  one_file("stratum", "partition stratum of the support cycle")->callback([&] {
    const Partition p = stratum(cycle(load_tuple(file_a_), cycle_options()));
    emit({{"stratum", p.alpha}, {"notation", p.notation()}});
  });

  one_file("localize", "split into summands at each support point")->callback([&] {
    const Localization loc = localize(load_tuple(file_a_), cycle_options());
    ojson summands = ojson::array();
    for (const auto& s : loc.summands)
      summands.push_back({{"point", point_json(s.point)},
                          {"mult", s.block.n()},
                          {"block", mats_json(s.block)},
                          {"recentered", mats_json(s.recentered())}});
    emit({{"change_of_basis", ojson(matrix_json(loc.change_of_basis.matrix()))}, {"summands", summands}});
  });

  two_files("isom", "isomorphism test with certificate")->callback([&] {
    const auto cert = is_isomorphic(load_tuple(file_a_), load_tuple(file_b_), isom_options());
    ojson r = {{"isomorphic", cert.has_value()}};
    if (cert) r["certificate"] = ojson(matrix_json(cert->matrix()));
    emit(r);
  });

  two_files("homdim", "dimension of the space of module maps a -> b")->callback([&] {
    emit({{"hom_dim", hom_basis(load_tuple(file_a_), load_tuple(file_b_)).dim()}});
  });

  one_file("autdim", "dimension of the endomorphism algebra")->callback([&] {
    emit({{"aut_dim", aut_dim(load_tuple(file_a_))}});
  });

  CLI::App* mingen = one_file("mingen", "minimal number of generators of a punctual module");
  mingen->add_flag("--local", local_, "localize first and report each summand");
  mingen->callback([&] {
    const CommutingTuple t = load_tuple(file_a_);
    if (!local_) {
      emit({{"min_generators", min_generators(t)}});
      return;
    }
    ojson local = ojson::array();
    for (const auto& s : localize(t, cycle_options()).summands)
      local.push_back({{"point", point_json(s.point)}, {"min_generators", min_generators(s.recentered())}});
    emit({{"local", local}});
  });

  one_file("tangent", "Zariski tangent space dimension of the commuting variety")->callback([&] {
    const CommutingTuple t = load_tuple(file_a_);
    emit({{"tangent_dim", tangent_space_dim(t)}, {"ambient_dim", t.d() * t.n() * t.n()}});
  });

  one_file("nilpotent", "whether the module is supported at the origin")->callback([&] {
    emit({{"nilpotent", is_punctual(load_tuple(file_a_))}});
  });

  // The potential does not need commuting matrices, so these read the
  // document structurally.
  one_file("potential", "Tr A1 [A2, A3]")->callback([&] {
    emit({{"potential", trace_potential(load(file_a_).matrices).to_string()}});
  });

  one_file("gradient", "gradient of Tr A1 [A2, A3]")->callback([&] {
    const std::vector<Matrix> grad = potential_gradient(load(file_a_).matrices);
    ojson out = ojson::array();
    bool zero = true;
    for (const auto& m : grad) {
      out.push_back(ojson(matrix_json(m)));
      zero = zero && m.is_zero();
    }
    emit({{"gradient", out}, {"zero", zero}});
  });

  CLI::App* tr = one_file("translate", "shift the module by a point");
  tr->add_option("--by", by_, "comma-separated coordinates")->required();
  tr->callback([&] {
    const ModuleDocument doc = load(file_a_);
    ModuleDocument out = doc;
    out.matrices = translate(document_tuple(doc), parse_scalar_list(doc.field, by_)).mats();
    emit_doc(out);
  });

  two_files("dsum", "direct sum")->callback([&] {
    emit_doc(make_document(direct_sum(load_tuple(file_a_), load_tuple(file_b_))));
  });

  one_file("frame-check", "Krylov span of the frame")->callback([&] {
    const FramedModule f = load_framed(file_a_);
    emit({{"r", f.r()}, {"krylov_dim", krylov_dim(f)}, {"generating", is_generating(f)}});
  });

  one_file("atlas-check", "whether the frame is a basis")->callback([&] {
    emit({{"atlas_point", is_atlas_point(load_framed(file_a_))}});
  });

  two_files("quot-equal", "equality of framed quotients with certificate")->callback([&] {
    const auto cert = quot_equal(load_framed(file_a_), load_framed(file_b_));
    ojson r = {{"equal", cert.has_value()}};
    if (cert) r["certificate"] = ojson(matrix_json(cert->matrix()));
    emit(r);
  });

  auto census_options = [&](CLI::App* sub) {
    sub->add_option("--n", n_, "length")->required();
    sub->add_option("--d", d_, "number of variables")->required();
    sub->add_option("--q", q_, "prime field size")->required();
    sub->add_option("--filter", filters_, "all, nilpotent, strata (repeatable or comma-separated)")->delimiter(',');
    sub->add_option("--relation", relations_, "polynomial relation the tuple must satisfy (repeatable)");
  };
  auto census_request = [&] {
    CensusRequest req;
    req.n = n_;
    req.d = d_;
    req.q = q_;
    req.budget = g_.config.census_budget;
    req.cycle = cycle_options();
    for (const auto& f : filters_) {
      if (f == "nilpotent")
        req.filter.nilpotent = true;
      else if (f == "strata")
        req.filter.per_stratum = true;
      else if (f != "all")
        fail(ErrorCode::ParseError, "unknown filter '" + f + "'", {{"filter", f}});
    }
    if (!relations_.empty()) {
      if (!is_prime_u64(q_) || q_ >= (1ULL << 31)) fail(ErrorCode::NonprimeQ, "q = " + std::to_string(q_) + " is not a prime", {{"q", q_}});
      for (const auto& text : relations_) req.filter.relations.push_back(parse_multipoly(Field::prime(q_), d_, text));
    }
    return req;
  };

  CLI::App* census = app.add_subcommand("census", "exact point count of commuting tuples over F_q");
  census_options(census);
  census->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const CensusRequest req = census_request();
    const CensusResult res = enumerate(req);
    ojson r = {{"n", req.n}, {"d", req.d}, {"q", req.q}, {"filter", req.filter.name()},
               {"raw_count", res.raw_count.get_str()}, {"gl_order", res.gl_order.get_str()},
               {"groupoid_count", rational_json(res.groupoid_count)}};
    if (res.per_stratum) {
      ojson strata = ojson::array();
      for (const auto& [p, count] : *res.per_stratum)
        strata.push_back({{"stratum", p.alpha}, {"notation", p.notation()}, {"count", count.get_str()}});
      r["per_stratum"] = strata;
    } else {
      r["per_stratum"] = nullptr;
    }
    r["unsplit_count"] = res.unsplit_count.get_str();
    if (g_.timing)
      r["elapsed_ms"] = std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - start).count());
    emit(r);
  });

  CLI::App* orbits = app.add_subcommand("orbit-census", "orbits of commuting tuples over F_q under conjugation");
  census_options(orbits);
  orbits->add_flag("--representatives", reps_, "include a representative of each orbit");
  orbits->callback([&] {
    const CensusRequest req = census_request();
    const std::vector<OrbitRecord> recs = orbit_census(req);
    mpq_class burnside = 0;
    mpz_class tuples = 0;
    ojson list = ojson::array();
    for (const auto& rec : recs) {
      burnside += mpq_class(1, 1) / mpq_class(rec.aut_order);
      tuples += rec.orbit_size;
      ojson o = {{"orbit_size", rec.orbit_size.get_str()}, {"aut_order", rec.aut_order.get_str()},
                 {"nilpotent", rec.nilpotent}};
      if (reps_) o["representative"] = mats_json(rec.representative);
      list.push_back(o);
    }
    burnside.canonicalize();
    emit({{"n", req.n}, {"d", req.d}, {"q", req.q}, {"filter", req.filter.name()},
          {"orbit_count", recs.size()}, {"raw_count", tuples.get_str()},
          {"gl_order", gl_order(req.n, req.q).get_str()}, {"burnside_sum", rational_json(burnside)},
          {"orbits", list}});
  });

  CLI::App* sample = app.add_subcommand("sample", "generate module documents");
  sample->require_subcommand(1);
  CLI::App* stair = sample->add_subcommand("staircase", "monomial module k[x,y]/I of a Young diagram");
  auto* cells_opt = stair->add_option("--cells", cells_, "cells as i,j;i,j;...");
  auto* rows_opt = stair->add_option("--rows", rows_, "row lengths as a,b,...");
  cells_opt->excludes(rows_opt);
  stair->add_option("--field", field_, "Q or Fp:<p>");
  stair->callback([&] {
    const Field f = Field::parse(field_);
    std::optional<Staircase> s;
    auto number = [](const std::string& text) -> std::size_t {
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9)
        fail(ErrorCode::ParseError, "expected a nonnegative integer, got '" + text + "'");
      return std::stoul(text);
    };
    if (!rows_.empty()) {
      std::vector<std::size_t> lengths;
      std::stringstream ss(rows_);
      for (std::string item; std::getline(ss, item, ',');) lengths.push_back(number(item));
      s = Staircase::from_row_lengths(lengths);
    } else {
      std::set<std::pair<std::size_t, std::size_t>> cells;
      std::stringstream ss(cells_);
      for (std::string item; std::getline(ss, item, ';');) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) fail(ErrorCode::ParseError, "cell '" + item + "' is not i,j");
        cells.emplace(number(item.substr(0, comma)), number(item.substr(comma + 1)));
      }
      s.emplace(std::move(cells));
    }
    emit_doc(make_document(from_staircase(*s, f)));
  });
  CLI::App* comp = sample->add_subcommand("companion", "companion matrix of a monic polynomial");
  comp->add_option("--coeffs", coeffs_, "ascending coefficients c0,c1,...,1")->required();
  comp->add_option("--field", field_, "Q or Fp:<p>");
  comp->callback([&] {
    const Field f = Field::parse(field_);
    emit_doc(make_document(companion(UniPoly(f, parse_scalar_list(f, coeffs_)))));
  });
  CLI::App* conj = sample->add_subcommand("conjugate", "seeded random conjugate of a module");
  conj->add_option("file", file_a_, "module document")->required()->check(CLI::ExistingFile);
  conj->callback([&] {
    const ModuleDocument doc = load(file_a_);
    Rng rng(g_.config.seed);
    if (doc.frame) {
      const FramedModule f = document_framed(doc);
      const GroupElement g = random_invertible(f.module.field(), f.module.n(), rng);
      emit_doc(make_document(transport(f, g)));
    } else {
      emit_doc(make_document(random_conjugate(document_tuple(doc), rng).second));
    }
  });
}

int App::run(int argc, char** argv) {
  CLI::App app{"Finite-length modules over polynomial rings as commuting matrix tuples", "cohn"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", g_.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g_.seed, "seed for pseudorandom choices (overrides the config)");
  auto* json_flag = app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", g_.pretty, "indented JSON output")->excludes(json_flag);
  app.add_flag("--timing", g_.timing, "add elapsed_ms to census reports");
  app.add_option("--isa", g_.isa, "kernel variant for the census")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.parse_complete_callback([&] { setup_config(); });
  add_commands(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    const ojson err = {{"error", error_code_name(e.code())}, {"message", e.what()}, {"detail", ojson(e.detail())}};
    std::cout << (g_.pretty ? err.dump(2) : err.dump()) << "\n";
    return is_usage_error(e.code()) ? kUsage : kDomain;
  } catch (const std::exception& e) {
    std::cerr << ojson({{"error", "INTERNAL"}, {"message", e.what()}}).dump() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return App().run(argc, argv);
}
