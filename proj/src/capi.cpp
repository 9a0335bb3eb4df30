#include "operm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "operm/algebra.hpp"
#include "operm/checks.hpp"
#include "operm/fibers.hpp"
#include "operm/lie.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

operm_status fail(operm_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class Fn>
operm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const operm::CapExceeded& e) {
    return fail(OPERM_ERR_CAP, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OPERM_ERR_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(OPERM_ERR_INVALID, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(OPERM_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(OPERM_ERR_INTERNAL, e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = token.find_last_not_of(" \t");
    out.push_back(std::stoi(token.substr(a, b - a + 1)));
  }
  return out;
}

}  // namespace

struct operm_ctx {
  int max_degree = 8;
  std::string cache_dir;

  void require_degree(int n) const {
    if (n > max_degree)
      throw operm::CapExceeded("degree " + std::to_string(n) +
                               " exceeds the configured cap of " +
                               std::to_string(max_degree));
  }
};

struct operm_combo {
  std::variant<operm::PermCombo, operm::SubsetCombo, operm::TreeCombo> value;

  int degree() const {
    return std::visit([](const auto& c) { return c.degree(); }, value);
  }
  std::string json() const {
    return std::visit(
        [](const auto& c) { return operm::combo_to_json_string(c); }, value);
  }
};

extern "C" {

const char* operm_version(void) { return "0.1.0"; }

const char* operm_last_error(void) { return g_last_error.c_str(); }

void operm_string_free(char* s) { std::free(s); }

operm_ctx* operm_ctx_new(void) { return new operm_ctx(); }

void operm_ctx_free(operm_ctx* ctx) { delete ctx; }

operm_status operm_ctx_set_max_degree(operm_ctx* ctx, int max_degree) {
  if (!ctx) return fail(OPERM_ERR_INVALID, "null context");
  if (max_degree < 1) return fail(OPERM_ERR_INVALID, "max degree must be >= 1");
  ctx->max_degree = max_degree;
  return OPERM_OK;
}

int operm_ctx_max_degree(const operm_ctx* ctx) {
  return ctx ? ctx->max_degree : 0;
}

operm_status operm_ctx_set_cache_dir(operm_ctx* ctx, const char* dir) {
  if (!ctx) return fail(OPERM_ERR_INVALID, "null context");
  ctx->cache_dir = dir ? dir : "";
  operm::set_poset_cache_dir(ctx->cache_dir);
  return OPERM_OK;
}

operm_status operm_ctx_save_caches(operm_ctx* ctx) {
  if (!ctx) return fail(OPERM_ERR_INVALID, "null context");
  return guarded([&]() {
    operm::save_poset_caches();
    return OPERM_OK;
  });
}

operm_status operm_combo_term(operm_ctx* ctx, const char* family,
                              const char* basis, const char* index_spec,
                              int degree, operm_combo** out) {
  if (!ctx || !family || !basis || !index_spec || !out)
    return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    operm::Family fam = operm::family_from_string(family);
    operm::Basis bas = operm::basis_from_string(basis);
    auto combo = std::make_unique<operm_combo>();
    switch (fam) {
      case operm::Family::S: {
        operm::Permutation p(parse_int_list(index_spec));
        if (p.degree() < 1)
          throw std::invalid_argument("family S needs degree >= 1");
        ctx->require_degree(p.degree());
        combo->value = operm::PermCombo::term(bas, p);
        break;
      }
      case operm::Family::Q: {
        if (degree < 1)
          throw std::invalid_argument("family Q needs an explicit degree");
        ctx->require_degree(degree);
        combo->value = operm::SubsetCombo::term(
            bas, operm::SubsetLabel(degree, parse_int_list(index_spec)));
        break;
      }
      default: {
        operm::Tree t = operm::parse_tree(index_spec);
        if (t.degree() < 1)
          throw std::invalid_argument("family Y needs degree >= 1");
        ctx->require_degree(t.degree());
        combo->value = operm::TreeCombo::term(bas, t);
        break;
      }
    }
    *out = combo.release();
    return OPERM_OK;
  });
}

operm_status operm_combo_parse_json(operm_ctx* ctx, const char* json,
                                    operm_combo** out) {
  if (!ctx || !json || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    nlohmann::json j = nlohmann::json::parse(json);
    auto combo = std::make_unique<operm_combo>();
    switch (operm::combo_family_of_json(j)) {
      case operm::Family::S:
        combo->value = operm::perm_combo_from_json(j);
        break;
      case operm::Family::Q:
        combo->value = operm::subset_combo_from_json(j);
        break;
      default:
        combo->value = operm::tree_combo_from_json(j);
        break;
    }
    ctx->require_degree(combo->degree());
    *out = combo.release();
    return OPERM_OK;
  });
}

operm_status operm_combo_to_json(const operm_combo* combo, char** out) {
  if (!combo || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    *out = dup_string(combo->json());
    return OPERM_OK;
  });
}

void operm_combo_free(operm_combo* combo) { delete combo; }

operm_status operm_compose(operm_ctx* ctx, const operm_combo* x,
                           const operm_combo* y, int i, operm_combo** out) {
  if (!ctx || !x || !y || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    if (x->value.index() != y->value.index())
      throw std::invalid_argument("compose: mixed families");
    ctx->require_degree(x->degree() + y->degree() - 1);
    auto combo = std::make_unique<operm_combo>();
    if (const auto* xs = std::get_if<operm::PermCombo>(&x->value)) {
      const auto& ys = std::get<operm::PermCombo>(y->value);
      combo->value = xs->basis() == operm::Basis::M
                         ? operm::compose_as_m(*xs, ys, i)
                         : operm::compose_as_f(*xs, ys, i);
    } else if (const auto* xq = std::get_if<operm::SubsetCombo>(&x->value)) {
      const auto& yq = std::get<operm::SubsetCombo>(y->value);
      combo->value = xq->basis() == operm::Basis::M
                         ? operm::compose_q_m(*xq, yq, i)
                         : operm::compose_q_f(*xq, yq, i);
    } else {
      const auto& xt = std::get<operm::TreeCombo>(x->value);
      const auto& yt = std::get<operm::TreeCombo>(y->value);
      combo->value = xt.basis() == operm::Basis::M ? operm::compose_y_m(xt, yt, i)
                                                   : operm::compose_y_f(xt, yt, i);
    }
    *out = combo.release();
    return OPERM_OK;
  });
}

operm_status operm_convert(operm_ctx* ctx, const operm_combo* x,
                           const char* to_basis, operm_combo** out) {
  if (!ctx || !x || !to_basis || !out)
    return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    operm::Basis bas = operm::basis_from_string(to_basis);
    ctx->require_degree(x->degree());
    auto combo = std::make_unique<operm_combo>();
    std::visit([&](const auto& c) { combo->value = operm::convert_to(c, bas); },
               x->value);
    *out = combo.release();
    return OPERM_OK;
  });
}

operm_status operm_dynkin(operm_ctx* ctx, int n, const char* basis,
                          operm_combo** out) {
  if (!ctx || !basis || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    if (n < 1) throw std::invalid_argument("dynkin: n must be >= 1");
    ctx->require_degree(n);
    operm::Basis bas = operm::basis_from_string(basis);
    auto combo = std::make_unique<operm_combo>();
    combo->value =
        bas == operm::Basis::M ? operm::dynkin_m(n) : operm::dynkin_nested(n);
    *out = combo.release();
    return OPERM_OK;
  });
}

operm_status operm_fibers_text(operm_ctx* ctx, int n, int m, int i, char** out) {
  if (!ctx || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    ctx->require_degree(n + m - 1);
    *out = dup_string(operm::fibers_text(n, m, i));
    return OPERM_OK;
  });
}

operm_status operm_fibers_dot(operm_ctx* ctx, int n, int m, int i, char** out) {
  if (!ctx || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    ctx->require_degree(n + m - 1);
    *out = dup_string(operm::fibers_dot(n, m, i));
    return OPERM_OK;
  });
}

operm_status operm_hasse_dot(operm_ctx* ctx, const char* family, int n,
                             char** out) {
  if (!ctx || !family || !out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    ctx->require_degree(n);
    if (n < 1) throw std::invalid_argument("hasse: degree must be >= 1");
    *out = dup_string(operm::hasse_dot(operm::family_from_string(family), n));
    return OPERM_OK;
  });
}

operm_status operm_run_check(operm_ctx* ctx, const char* suite, int max_degree,
                             char** report_json) {
  if (!ctx || !suite || !report_json)
    return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    if (max_degree > ctx->max_degree)
      throw operm::CapExceeded("check bound exceeds the configured cap");
    operm::SuiteResult result = operm::run_suite(suite, max_degree);
    *report_json = dup_string(operm::suite_report_json(result));
    if (!result.passed) {
      g_last_error = "suite " + result.suite + " failed";
      return OPERM_ERR_CHECK_FAILED;
    }
    return OPERM_OK;
  });
}

operm_status operm_suite_names(char** out) {
  if (!out) return fail(OPERM_ERR_INVALID, "null argument");
  return guarded([&]() {
    std::string text;
    for (const auto& name : operm::suite_names()) {
      text += name;
      text += "\n";
    }
    *out = dup_string(text);
    return OPERM_OK;
  });
}

}  // extern "C"
