// Copyright (c) 2026 dpring developers
// SPDX-License-Identifier: Apache-2.0

#include "dpring.h"

#include <cstring>
#include <string>

#include "commands.hpp"
#include "expr.hpp"
#include "gb.hpp"
#include "lie.hpp"
#include "specdoc.hpp"

struct dpr_ring {
  dpr::RingSpec spec;
};
struct dpr_poly {
  dpr::Poly poly;
};
struct dpr_gb {
  dpr::GBasis basis;
};
struct dpr_lie {
  dpr::LieAlgebra lie;
};

namespace {

thread_local std::string g_last_error;

dpr_status set_error(dpr_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
dpr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const dpr::Error& e) {
    return set_error(e.is_usage() ? DPR_ERR_USAGE : DPR_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return set_error(DPR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dpr_status require(bool ok, const char* what) {
  if (ok) return DPR_OK;
  return set_error(DPR_ERR_ARG, std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

const char* dpr_last_error(void) { return g_last_error.c_str(); }

void dpr_string_free(char* s) { delete[] s; }

dpr_status dpr_ring_from_json(const char* json_text, dpr_ring** out) {
  if (require(json_text && out, "json_text/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    dpr::SpecDocument doc = dpr::load_spec_document(json_text);
    if (doc.kind != dpr::SpecDocument::Kind::ring)
      dpr::fail(dpr::Errc::bad_argument, "document is a Lie spec; use dpr_lie_from_json");
    *out = new dpr_ring{*doc.ring};
    return DPR_OK;
  });
}

void dpr_ring_free(dpr_ring* r) { delete r; }

dpr_status dpr_ring_nvars(const dpr_ring* r, int* out) {
  if (require(r && out, "ring/out") != DPR_OK) return DPR_ERR_ARG;
  *out = r->spec.nvars();
  return DPR_OK;
}

dpr_status dpr_ring_is_valid(const dpr_ring* r, int* out) {
  if (require(r && out, "ring/out") != DPR_OK) return DPR_ERR_ARG;
  *out = r->spec.is_valid() ? 1 : 0;
  return DPR_OK;
}

dpr_status dpr_ring_is_filtered(const dpr_ring* r, int* out) {
  if (require(r && out, "ring/out") != DPR_OK) return DPR_ERR_ARG;
  *out = r->spec.filtered() ? 1 : 0;
  return DPR_OK;
}

dpr_status dpr_ring_validation_json(const dpr_ring* r, char** out) {
  if (require(r && out, "ring/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    const dpr::ValidationReport& rep = r->spec.validation();
    nlohmann::ordered_json j;
    j["ok"] = rep.ok;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) {
      nlohmann::ordered_json o;
      o["i"] = v.i + 1;
      if (v.k >= 0)
        o["k"] = v.k + 1;
      else
        o["k"] = nullptr;
      o["j"] = v.j + 1;
      o["detail"] = v.detail;
      arr.push_back(std::move(o));
    }
    j["violations"] = std::move(arr);
    *out = dup_string(j.dump(2));
    return DPR_OK;
  });
}

dpr_status dpr_poly_parse(const dpr_ring* r, const char* expr, dpr_poly** out) {
  if (require(r && expr && out, "ring/expr/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = new dpr_poly{dpr::parse_expression(expr, r->spec)};
    return DPR_OK;
  });
}

void dpr_poly_free(dpr_poly* p) { delete p; }

dpr_status dpr_poly_to_string(const dpr_poly* p, char** out) {
  if (require(p && out, "poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = dup_string(p->poly.to_string());
    return DPR_OK;
  });
}

#define DPR_POLY_BINOP(name, expr_)                                               \
  dpr_status name(const dpr_poly* a, const dpr_poly* b, dpr_poly** out) {         \
    if (require(a && b && out, "lhs/rhs/out") != DPR_OK) return DPR_ERR_ARG;      \
    return guarded([&] {                                                          \
      *out = new dpr_poly{expr_};                                                 \
      return DPR_OK;                                                              \
    });                                                                           \
  }

DPR_POLY_BINOP(dpr_poly_add, a->poly + b->poly)
DPR_POLY_BINOP(dpr_poly_sub, a->poly - b->poly)
DPR_POLY_BINOP(dpr_poly_mul, dpr::mul(a->poly, b->poly))

#undef DPR_POLY_BINOP

dpr_status dpr_poly_degree(const dpr_poly* p, int* out) {
  if (require(p && out, "poly/out") != DPR_OK) return DPR_ERR_ARG;
  *out = p->poly.degree();
  return DPR_OK;
}

dpr_status dpr_poly_equal(const dpr_poly* a, const dpr_poly* b, int* out) {
  if (require(a && b && out, "lhs/rhs/out") != DPR_OK) return DPR_ERR_ARG;
  *out = a->poly == b->poly ? 1 : 0;
  return DPR_OK;
}

dpr_status dpr_poly_is_central(const dpr_poly* p, int* out) {
  if (require(p && out, "poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = dpr::is_central(p->poly) ? 1 : 0;
    return DPR_OK;
  });
}

dpr_status dpr_poly_is_normal(const dpr_poly* p, int* out) {
  if (require(p && out, "poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = dpr::is_normal(p->poly) ? 1 : 0;
    return DPR_OK;
  });
}

dpr_status dpr_poly_apply_derivation(const dpr_ring* r, int i, const dpr_poly* p,
                                     dpr_poly** out) {
  if (require(r && p && out, "ring/poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = new dpr_poly{dpr::apply_derivation(r->spec, i, p->poly)};
    return DPR_OK;
  });
}

dpr_status dpr_gb_compute(const dpr_ring* r, const char* gens, int two_sided, dpr_gb** out) {
  if (require(r && gens && out, "ring/gens/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    std::vector<dpr::Poly> list = dpr::parse_expression_list(gens, r->spec);
    dpr::GBasis basis =
        two_sided ? dpr::twosided_gb(r->spec, list) : dpr::left_gb(r->spec, list);
    *out = new dpr_gb{std::move(basis)};
    return DPR_OK;
  });
}

void dpr_gb_free(dpr_gb* g) { delete g; }

dpr_status dpr_gb_size(const dpr_gb* g, size_t* out) {
  if (require(g && out, "gb/out") != DPR_OK) return DPR_ERR_ARG;
  *out = g->basis.elements.size();
  return DPR_OK;
}

dpr_status dpr_gb_element(const dpr_gb* g, size_t index, char** out) {
  if (require(g && out, "gb/out") != DPR_OK) return DPR_ERR_ARG;
  if (index >= g->basis.elements.size())
    return set_error(DPR_ERR_ARG, "basis index out of range");
  return guarded([&] {
    *out = dup_string(g->basis.elements[index].to_string());
    return DPR_OK;
  });
}

dpr_status dpr_gb_reduce(const dpr_gb* g, const dpr_poly* p, dpr_poly** out) {
  if (require(g && p && out, "gb/poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = new dpr_poly{dpr::reduce(p->poly, g->basis)};
    return DPR_OK;
  });
}

dpr_status dpr_gb_member(const dpr_gb* g, const dpr_poly* p, int* out) {
  if (require(g && p && out, "gb/poly/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = dpr::member(p->poly, g->basis) ? 1 : 0;
    return DPR_OK;
  });
}

dpr_status dpr_gb_quotient_dim(const dpr_gb* g, int* finite, unsigned long long* dim) {
  if (require(g && finite && dim, "gb/finite/dim") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    dpr::QuotientDim q = dpr::quotient_dim(g->basis);
    *finite = q.finite ? 1 : 0;
    *dim = q.finite ? q.dim : 0;
    return DPR_OK;
  });
}

dpr_status dpr_lie_from_json(const char* json_text, dpr_lie** out) {
  if (require(json_text && out, "json_text/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    dpr::SpecDocument doc = dpr::load_spec_document(json_text);
    if (doc.kind != dpr::SpecDocument::Kind::lie)
      dpr::fail(dpr::Errc::bad_argument, "document is a ring spec; use dpr_ring_from_json");
    *out = new dpr_lie{*doc.lie};
    return DPR_OK;
  });
}

void dpr_lie_free(dpr_lie* l) { delete l; }

#define DPR_LIE_FLAG(name, call)                                           \
  dpr_status name(const dpr_lie* l, int* out) {                            \
    if (require(l && out, "lie/out") != DPR_OK) return DPR_ERR_ARG;        \
    return guarded([&] {                                                   \
      *out = l->lie.call() ? 1 : 0;                                        \
      return DPR_OK;                                                       \
    });                                                                    \
  }

DPR_LIE_FLAG(dpr_lie_is_valid, is_valid)
DPR_LIE_FLAG(dpr_lie_is_adapted, is_adapted_flag)
DPR_LIE_FLAG(dpr_lie_is_solvable, is_solvable)
DPR_LIE_FLAG(dpr_lie_is_nilpotent, is_nilpotent)
DPR_LIE_FLAG(dpr_lie_derived_is_nilpotent, derived_is_nilpotent)

#undef DPR_LIE_FLAG

dpr_status dpr_lie_to_ring(const dpr_lie* l, dpr_ring** out) {
  if (require(l && out, "lie/out") != DPR_OK) return DPR_ERR_ARG;
  return guarded([&] {
    *out = new dpr_ring{l->lie.to_ring_spec()};
    return DPR_OK;
  });
}

int dpr_run_command(int argc, const char* const* argv, char** out, char** err) {
  std::vector<std::string> args;
  for (int i = 0; i < argc; ++i) {
    if (!argv[i]) {
      set_error(DPR_ERR_ARG, "null argv entry");
      return 2;
    }
    args.emplace_back(argv[i]);
  }
  try {
    dpr::CommandResult res = dpr::run_command(args);
    if (out) *out = dup_string(res.out);
    if (err) *err = dup_string(res.err);
    return res.exit_code;
  } catch (const std::exception& e) {
    set_error(DPR_ERR_INTERNAL, e.what());
    if (err) *err = dup_string(std::string("internal error: ") + e.what() + "\n");
    if (out) *out = dup_string("");
    return 1;
  }
}

}  // extern "C"
