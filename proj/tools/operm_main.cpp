// operm command-line front end. All computation goes through the C API in
// operm.h; this file only parses flags and prints.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "operm.h"

namespace {

constexpr int kDefaultCap = 8;

struct CtxDeleter {
  void operator()(operm_ctx* c) const { operm_ctx_free(c); }
};
struct ComboDeleter {
  void operator()(operm_combo* c) const { operm_combo_free(c); }
};
using CtxPtr = std::unique_ptr<operm_ctx, CtxDeleter>;
using ComboPtr = std::unique_ptr<operm_combo, ComboDeleter>;

int exit_code_for(operm_status st) {
  switch (st) {
    case OPERM_OK: return 0;
    case OPERM_ERR_CHECK_FAILED: return 1;
    case OPERM_ERR_CAP: return 3;
    default: return 2;
  }
}

int report_error(operm_status st) {
  std::fprintf(stderr, "error: %s\n", operm_last_error());
  return exit_code_for(st);
}

// A term spec is either inline JSON (leading '{') or the plain index syntax.
operm_status make_combo(operm_ctx* ctx, const std::string& family,
                        const std::string& basis, const std::string& spec,
                        int degree, operm_combo** out) {
  if (!spec.empty() && spec[0] == '{')
    return operm_combo_parse_json(ctx, spec.c_str(), out);
  return operm_combo_term(ctx, family.c_str(), basis.c_str(), spec.c_str(),
                          degree, out);
}

int print_combo(const operm_combo* combo) {
  char* json = nullptr;
  operm_status st = operm_combo_to_json(combo, &json);
  if (st != OPERM_OK) return report_error(st);
  std::printf("%s\n", json);
  operm_string_free(json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operadic computations on symmetric group algebras"};
  app.set_version_flag("--version", operm_version());
  app.require_subcommand(1);

  int max_n = kDefaultCap;
  bool ack_factorial = false;
  std::string cache_dir;
  app.add_option("--max-n", max_n,
                 "degree cap (default 8; larger values need --ack-factorial)");
  app.add_flag("--ack-factorial", ack_factorial,
               "acknowledge the factorial cost of raising --max-n");
  app.add_option("--cache-dir", cache_dir,
                 "directory for order-table caches (default $OPERM_CACHE_DIR)");

  auto* compose = app.add_subcommand("compose", "slot composition x o_i y");
  std::string family = "S", basis = "F", xspec, yspec;
  int slot = 1, xdeg = 0, ydeg = 0;
  compose->add_option("--family", family, "S, Q, or Y")->capture_default_str();
  compose->add_option("--basis", basis, "F or M")->capture_default_str();
  compose->add_option("--x", xspec, "left term (index syntax or inline JSON)")
      ->required();
  compose->add_option("--y", yspec, "right term")->required();
  compose->add_option("--i", slot, "slot, 1-based")->required();
  compose->add_option("--n", xdeg, "degree of x (family Q)");
  compose->add_option("--m", ydeg, "degree of y (family Q)");

  auto* convert = app.add_subcommand("convert", "basis change of a combo");
  std::string cfamily = "S", cbasis = "F", cto = "M", cspec;
  int cdeg = 0;
  convert->add_option("--family", cfamily, "S, Q, or Y")->capture_default_str();
  convert->add_option("--basis", cbasis, "input basis")->capture_default_str();
  convert->add_option("--to", cto, "output basis")->capture_default_str();
  convert->add_option("--x", cspec, "term (index syntax or inline JSON)")
      ->required();
  convert->add_option("--n", cdeg, "degree of x (family Q)");

  auto* fibers = app.add_subcommand("fibers", "fibers of the slot projection");
  int fn = 3, fm = 2, fi = 1;
  bool dot = false;
  fibers->add_option("--n", fn)->required();
  fibers->add_option("--m", fm)->required();
  fibers->add_option("--i", fi)->required();
  fibers->add_flag("--dot", dot, "emit a DOT Hasse diagram with bold fiber edges");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of an order, DOT form");
  std::string hfamily = "S";
  int hn = 3;
  hasse->add_option("--family", hfamily, "S, Q, or Y")->capture_default_str();
  hasse->add_option("--n", hn)->required();

  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string suite;
  int check_degree = 0;
  check->add_option("suite", suite, "suite name, or 'all'")->required();
  check->add_option("--max-degree", check_degree,
                    "override the suite's sweep bound");

  auto* dynkin = app.add_subcommand("dynkin", "Dynkin element theta_n");
  int dn = 1;
  std::string dbasis = "M";
  dynkin->add_option("--n", dn)->required();
  dynkin->add_option("--basis", dbasis, "F or M")->capture_default_str();

  auto* suites = app.add_subcommand("suites", "list verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
  }

  if (max_n > kDefaultCap && !ack_factorial) {
    std::fprintf(stderr,
                 "error: --max-n %d exceeds the default cap of %d; sizes grow "
                 "factorially, pass --ack-factorial to proceed\n",
                 max_n, kDefaultCap);
    return 2;
  }

  CtxPtr ctx(operm_ctx_new());
  operm_status st = operm_ctx_set_max_degree(ctx.get(), max_n);
  if (st != OPERM_OK) return report_error(st);
  if (cache_dir.empty()) {
    const char* env = std::getenv("OPERM_CACHE_DIR");
    if (env) cache_dir = env;
  }
  if (!cache_dir.empty()) {
    st = operm_ctx_set_cache_dir(ctx.get(), cache_dir.c_str());
    if (st != OPERM_OK) return report_error(st);
  }
  auto save_caches = [&] {
    if (!cache_dir.empty()) operm_ctx_save_caches(ctx.get());
  };

  if (compose->parsed()) {
    operm_combo* raw = nullptr;
    st = make_combo(ctx.get(), family, basis, xspec, xdeg, &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr x(raw);
    st = make_combo(ctx.get(), family, basis, yspec, ydeg, &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr y(raw);
    st = operm_compose(ctx.get(), x.get(), y.get(), slot, &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr result(raw);
    int rc = print_combo(result.get());
    save_caches();
    return rc;
  }

  if (convert->parsed()) {
    operm_combo* raw = nullptr;
    st = make_combo(ctx.get(), cfamily, cbasis, cspec, cdeg, &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr x(raw);
    st = operm_convert(ctx.get(), x.get(), cto.c_str(), &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr result(raw);
    int rc = print_combo(result.get());
    save_caches();
    return rc;
  }

  if (fibers->parsed()) {
    char* text = nullptr;
    st = dot ? operm_fibers_dot(ctx.get(), fn, fm, fi, &text)
             : operm_fibers_text(ctx.get(), fn, fm, fi, &text);
    if (st != OPERM_OK) return report_error(st);
    std::printf("%s", text);
    operm_string_free(text);
    save_caches();
    return 0;
  }

  if (hasse->parsed()) {
    char* text = nullptr;
    st = operm_hasse_dot(ctx.get(), hfamily.c_str(), hn, &text);
    if (st != OPERM_OK) return report_error(st);
    std::printf("%s", text);
    operm_string_free(text);
    save_caches();
    return 0;
  }

  if (check->parsed()) {
    char* report = nullptr;
    st = operm_run_check(ctx.get(), suite.c_str(), check_degree, &report);
    if (st != OPERM_OK && st != OPERM_ERR_CHECK_FAILED) return report_error(st);
    std::printf("%s\n", report);
    operm_string_free(report);
    save_caches();
    return exit_code_for(st);
  }

  if (dynkin->parsed()) {
    operm_combo* raw = nullptr;
    st = operm_dynkin(ctx.get(), dn, dbasis.c_str(), &raw);
    if (st != OPERM_OK) return report_error(st);
    ComboPtr result(raw);
    int rc = print_combo(result.get());
    save_caches();
    return rc;
  }

  if (suites->parsed()) {
    char* names = nullptr;
    st = operm_suite_names(&names);
    if (st != OPERM_OK) return report_error(st);
    std::printf("%s", names);
    operm_string_free(names);
    return 0;
  }

  return 2;
}
