#include "skg/skg.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "skg/module_builder.hpp"
#include "skg/theorems.hpp"

struct skg_module {
  std::unique_ptr<skg::QuotientModule> module;
  std::vector<std::pair<skg::Weight, std::size_t>> weights;
};

struct skg_decomposition {
  skg::DecompositionData data;
};

struct skg_factors {
  int n = 0;
  skg::Multiset factors;
  std::vector<std::pair<std::string, long long>> flat;
  void refresh() {
    flat.clear();
    for (const auto& [mu, c] : factors) {
      if (c != 0) flat.emplace_back(mu.to_string(), c);
    }
  }
};

struct skg_report {
  skg::SuiteReport report;
};

namespace {

thread_local std::string g_last_error;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

skg_status fail(skg_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

template <class Fn>
skg_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const ParseError& e) {
    return fail(SKG_PARSE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SKG_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SKG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKG_INTERNAL_ERROR, e.what());
  }
}

skg::Partition parse_partition(const char* text) {
  if (!text) throw std::invalid_argument("null partition");
  try {
    return skg::Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad partition '") + text + "': " + e.what());
  }
}

skg::BuildOptions build_options(const skg_build_options* o) {
  skg::BuildOptions b;
  if (o) b.threads = o->threads;
  return b;
}

skg_status copy_out(const std::string& s, char* out, std::size_t out_size, std::size_t* needed = nullptr) {
  if (needed) *needed = s.size() + 1;
  if (!out || out_size < s.size() + 1) {
    return fail(SKG_BUFFER_TOO_SMALL, "output buffer needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return SKG_OK;
}

#define SKG_REQUIRE(cond, msg) \
  if (!(cond)) return fail(SKG_INVALID_ARGUMENT, msg)

}  // namespace

extern "C" {

const char* skg_version(void) { return "1.0.0"; }

const char* skg_last_error(void) { return g_last_error.c_str(); }

const char* skg_status_string(skg_status status) {
  switch (status) {
    case SKG_OK: return "ok";
    case SKG_INVALID_ARGUMENT: return "invalid argument";
    case SKG_PARSE_ERROR: return "parse error";
    case SKG_IO_ERROR: return "i/o error";
    case SKG_VALIDATION_ERROR: return "validation error";
    case SKG_BUFFER_TOO_SMALL: return "buffer too small";
    case SKG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

skg_status skg_partition_normalize(const char* text, char* out, size_t out_size) {
  return guarded([&] { return copy_out(parse_partition(text).to_string(), out, out_size); });
}

skg_status skg_partition_count(int n, size_t* count) {
  return guarded([&] {
    SKG_REQUIRE(count && n >= 1 && n <= 40, "need 1 <= n <= 40 and a non-null output");
    *count = skg::partitions_of(n).size();
    return SKG_OK;
  });
}

skg_status skg_partition_at(int n, size_t index, char* out, size_t out_size) {
  return guarded([&] {
    SKG_REQUIRE(n >= 1 && n <= 40, "need 1 <= n <= 40");
    auto all = skg::partitions_of(n);
    SKG_REQUIRE(index < all.size(), "partition index out of range");
    return copy_out(all[index].to_string(), out, out_size);
  });
}

skg_status skg_hook_content_dim(const char* lambda, int d, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(dim && d >= 1, "need d >= 1 and a non-null output");
    *dim = skg::hook_content_dim(parse_partition(lambda), d);
    return SKG_OK;
  });
}

skg_status skg_count_syt(const char* lambda, uint64_t* count) {
  return guarded([&] {
    SKG_REQUIRE(count, "null output");
    *count = skg::count_syt(parse_partition(lambda));
    return SKG_OK;
  });
}

skg_status skg_module_build(skg_module_kind kind, const char* lambda, int d, int p,
                            const skg_build_options* options, skg_module** out) {
  return guarded([&] {
    SKG_REQUIRE(out, "null output");
    *out = nullptr;
    SKG_REQUIRE(d >= 1 && d <= 255, "need 1 <= d <= 255");
    auto shape = parse_partition(lambda);
    auto m = std::make_unique<skg_module>();
    auto b = build_options(options);
    if (kind == SKG_NABLA) {
      m->module = std::make_unique<skg::QuotientModule>(skg::build_dual_weyl(shape, d, p, b));
    } else if (kind == SKG_GTENSOR) {
      m->module = std::make_unique<skg::QuotientModule>(skg::build_gtensor_specht(shape, d, p, b));
    } else {
      return fail(SKG_INVALID_ARGUMENT, "unknown module kind");
    }
    for (const auto& [w, c] : m->module->weight_table()) m->weights.emplace_back(w, c);
    *out = m.release();
    return SKG_OK;
  });
}

void skg_module_free(skg_module* module) { delete module; }

skg_status skg_module_dim(const skg_module* module, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(module && dim, "null argument");
    *dim = module->module->dim();
    return SKG_OK;
  });
}

skg_status skg_module_ambient_dim(const skg_module* module, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(module && dim, "null argument");
    *dim = module->module->ambient()->dim();
    return SKG_OK;
  });
}

skg_status skg_module_weight_count(const skg_module* module, size_t* count) {
  return guarded([&] {
    SKG_REQUIRE(module && count, "null argument");
    *count = module->weights.size();
    return SKG_OK;
  });
}

skg_status skg_module_weight_at(const skg_module* module, size_t index, int* weight,
                                size_t weight_len, uint64_t* multiplicity) {
  return guarded([&] {
    SKG_REQUIRE(module && weight && multiplicity, "null argument");
    SKG_REQUIRE(index < module->weights.size(), "weight index out of range");
    const auto& [w, c] = module->weights[index];
    if (weight_len < w.size()) return fail(SKG_BUFFER_TOO_SMALL, "weight buffer needs d entries");
    for (std::size_t i = 0; i < w.size(); ++i) weight[i] = w[i];
    *multiplicity = c;
    return SKG_OK;
  });
}

skg_status skg_module_u_dim(const skg_module* module, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(module && dim, "null argument");
    *dim = skg::u_lambda_dim(*module->module);
    return SKG_OK;
  });
}

skg_status skg_module_verify_iso(const skg_module* module, int* iso) {
  return guarded([&] {
    SKG_REQUIRE(module && iso, "null argument");
    *iso = skg::verify_iso(*module->module) ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_u_lambda_dim(const char* lambda, int d, const skg_build_options* options, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(dim && d >= 1 && d <= 255, "need 1 <= d <= 255 and a non-null output");
    *dim = skg::u_lambda_dim(parse_partition(lambda), d, build_options(options));
    return SKG_OK;
  });
}

skg_status skg_verify_iso(const char* lambda, int d, int p, const skg_build_options* options, int* iso) {
  return guarded([&] {
    SKG_REQUIRE(iso && d >= 1 && d <= 255, "need 1 <= d <= 255 and a non-null output");
    *iso = skg::verify_iso(parse_partition(lambda), d, p, build_options(options)) ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_restrict_entries(const char* lambda, int d, int d_prime, int p,
                                const skg_build_options* options, uint64_t* restricted,
                                uint64_t* direct) {
  return guarded([&] {
    SKG_REQUIRE(restricted && direct, "null output");
    auto r = skg::restrict_entries(parse_partition(lambda), d, d_prime, p, build_options(options));
    *restricted = r.restricted;
    *direct = r.direct;
    return SKG_OK;
  });
}

skg_status skg_predict_iso(const char* lambda, int* iso) {
  return guarded([&] {
    SKG_REQUIRE(iso, "null output");
    *iso = skg::predict_iso(parse_partition(lambda)) ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_d1_predict(const char* lambda, int* line) {
  return guarded([&] {
    SKG_REQUIRE(line, "null output");
    *line = skg::d1_predict(parse_partition(lambda)) == skg::D1Verdict::Line ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_hook_d2_dim(int a, int l, uint64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(dim, "null output");
    *dim = skg::hook_d2_dim(a, l);
    return SKG_OK;
  });
}

skg_status skg_frobenius_weight_check(int a, int l, const skg_build_options* options, int* ok) {
  return guarded([&] {
    SKG_REQUIRE(ok, "null output");
    *ok = skg::frobenius_weight_check(a, l, build_options(options)) ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_decomposition_load(const char* path, skg_decomposition** out) {
  return guarded([&] {
    SKG_REQUIRE(out, "null output");
    *out = nullptr;
    std::string file = path ? path : skg::DecompositionData::default_path();
    std::ifstream in(file);
    if (!in) return fail(SKG_IO_ERROR, "cannot open decomposition data: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      *out = new skg_decomposition{skg::DecompositionData::parse(ss.str())};
    } catch (const std::runtime_error& e) {
      return fail(SKG_VALIDATION_ERROR, e.what());
    }
    return SKG_OK;
  });
}

void skg_decomposition_free(skg_decomposition* data) { delete data; }

skg_status skg_dim_L(const skg_decomposition* data, const char* mu, int d, int64_t* dim) {
  return guarded([&] {
    SKG_REQUIRE(data && dim && d >= 1, "null argument or d < 1");
    *dim = data->data.dim_L(parse_partition(mu), d);
    return SKG_OK;
  });
}

skg_status skg_composition_factors_u(const skg_decomposition* data, const char* lambda,
                                     const skg_build_options* options, skg_factors** out) {
  return guarded([&] {
    SKG_REQUIRE(data && out, "null argument");
    *out = nullptr;
    auto shape = parse_partition(lambda);
    skg::FactorSolution sol;
    try {
      sol = skg::composition_factors_U(shape, data->data, build_options(options));
    } catch (const std::runtime_error& e) {
      return fail(SKG_VALIDATION_ERROR, e.what());
    }
    if (!sol.evaluations_match) return fail(SKG_VALIDATION_ERROR, "dimension cross-check failed");
    auto f = std::make_unique<skg_factors>();
    f->n = shape.size();
    f->factors = std::move(sol.factors);
    f->refresh();
    *out = f.release();
    return SKG_OK;
  });
}

void skg_factors_free(skg_factors* factors) { delete factors; }

skg_status skg_factors_count(const skg_factors* factors, size_t* count) {
  return guarded([&] {
    SKG_REQUIRE(factors && count, "null argument");
    *count = factors->flat.size();
    return SKG_OK;
  });
}

skg_status skg_factors_at(const skg_factors* factors, size_t index, char* mu, size_t mu_size,
                          int64_t* multiplicity) {
  return guarded([&] {
    SKG_REQUIRE(factors && multiplicity, "null argument");
    SKG_REQUIRE(index < factors->flat.size(), "factor index out of range");
    *multiplicity = factors->flat[index].second;
    return copy_out(factors->flat[index].first, mu, mu_size);
  });
}

skg_status skg_factors_add_nabla(skg_factors* factors, const skg_decomposition* data, const char* lambda) {
  return guarded([&] {
    SKG_REQUIRE(factors && data, "null argument");
    auto shape = parse_partition(lambda);
    SKG_REQUIRE(shape.size() == factors->n, "shape has the wrong size");
    for (const auto& [mu, c] : skg::nabla_factors(shape, data->data)) factors->factors[mu] += c;
    factors->refresh();
    return SKG_OK;
  });
}

skg_status skg_nabla_filtration_feasible(const skg_decomposition* data, const skg_factors* factors,
                                         int* feasible) {
  return guarded([&] {
    SKG_REQUIRE(data && factors && feasible, "null argument");
    *feasible = skg::nabla_filtration_feasible(factors->factors, factors->n, data->data) ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_run_suite(const char* name, const skg_suite_options* options, skg_report** out) {
  return guarded([&] {
    SKG_REQUIRE(name && out, "null argument");
    *out = nullptr;
    skg::SuiteOptions o;
    if (options) {
      if (options->n_min > 0) o.n_min = options->n_min;
      o.n_max = options->n_max;
      o.weaker_bound = options->weaker_bound != 0;
      o.threads = options->threads;
      if (options->data_path) o.data_path = options->data_path;
    }
    SKG_REQUIRE(o.n_max >= 0 && o.n_max <= 12, "n_max must lie in [0, 12]");
    *out = new skg_report{skg::run_suite(name, o)};
    return SKG_OK;
  });
}

void skg_report_free(skg_report* report) { delete report; }

skg_status skg_report_count(const skg_report* report, size_t* count) {
  return guarded([&] {
    SKG_REQUIRE(report && count, "null argument");
    *count = report->report.items.size();
    return SKG_OK;
  });
}

skg_status skg_report_passed(const skg_report* report, int* passed) {
  return guarded([&] {
    SKG_REQUIRE(report && passed, "null argument");
    *passed = report->report.passed() ? 1 : 0;
    return SKG_OK;
  });
}

skg_status skg_report_item(const skg_report* report, size_t index, skg_check_item* item) {
  return guarded([&] {
    SKG_REQUIRE(report && item, "null argument");
    SKG_REQUIRE(index < report->report.items.size(), "item index out of range");
    const auto& c = report->report.items[index];
    *item = {c.lambda.c_str(), c.d, c.p, c.kind.c_str(), c.expected.c_str(), c.got.c_str(), c.pass ? 1 : 0};
    return SKG_OK;
  });
}

skg_status skg_table1_csv(int d, char* out, size_t out_size, size_t* needed) {
  return guarded([&] {
    SKG_REQUIRE(d >= 1 && d <= 12, "need 1 <= d <= 12");
    return copy_out(skg::table1_csv(d), out, out_size, needed);
  });
}

skg_status skg_table3_csv(const skg_decomposition* data, int n, const skg_build_options* options,
                          char* out, size_t out_size, size_t* needed) {
  return guarded([&] {
    SKG_REQUIRE(data, "null argument");
    SKG_REQUIRE(n >= 1 && n <= data->data.max_n(), "n outside the decomposition data");
    return copy_out(skg::table3_csv(skg::table3(n, data->data, build_options(options))), out, out_size, needed);
  });
}

}  // extern "C"
