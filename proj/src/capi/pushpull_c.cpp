#include "pushpull/pushpull.h"

#include "pushpull/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace pushpull;

struct pp_polytope {
  ParamPolytope family;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
pp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return PP_INPUT_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return PP_INPUT_ERROR;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return PP_INPUT_ERROR;
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return PP_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return PP_INTERNAL;
  }
}

Json parse(const char* text) {
  if (!text) throw InputError("null input");
  return Json::parse(text);
}

pp_status emit(const Report& r, char** out) {
  *out = dup(r.json.dump(2));
  if (!r.passed) last_error = "verification failed";
  return r.passed ? PP_OK : PP_VERIFICATION_FAILED;
}

pp_status null_argument() {
  last_error = "null argument";
  return PP_INPUT_ERROR;
}

}  // namespace

extern "C" {

const char* pp_version(void) { return "0.1.0"; }
const char* pp_last_error(void) { return last_error.c_str(); }
void pp_string_free(char* s) { std::free(s); }

pp_status pp_polytope_from_json(const char* json, pp_polytope** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new pp_polytope{polytope_from_json(parse(json))};
    return PP_OK;
  });
}

void pp_polytope_free(pp_polytope* p) { delete p; }

pp_status pp_polytope_dim(const pp_polytope* p, size_t* out) {
  if (!p || !out) return null_argument();
  *out = p->family.dim;
  return PP_OK;
}

pp_status pp_polytope_param_count(const pp_polytope* p, size_t* out) {
  if (!p || !out) return null_argument();
  *out = p->family.params.size();
  return PP_OK;
}

pp_status pp_polytope_canonical_json(const pp_polytope* p, char** out_json) {
  if (!p || !out_json) return null_argument();
  return guarded([&] { return emit(build_report(p->family), out_json); });
}

pp_status pp_polytope_volume(const pp_polytope* p, char** out_text) {
  if (!p || !out_text) return null_argument();
  return guarded([&] {
    *out_text = dup(volume_polynomial(p->family).to_string());
    return PP_OK;
  });
}

pp_status pp_polytope_volume_json(const pp_polytope* p, char** out_json) {
  if (!p || !out_json) return null_argument();
  return guarded([&] { return emit(volume_report(p->family), out_json); });
}

pp_status pp_polytope_volume_at_reference(const pp_polytope* p, char** out_text) {
  if (!p || !out_text) return null_argument();
  return guarded([&] {
    *out_text = dup(to_string(volume(Polytope::from_h(p->family.at_reference())).value));
    return PP_OK;
  });
}

pp_status pp_polytope_ring_json(const pp_polytope* p, int max_degree, char** out_json) {
  if (!p || !out_json) return null_argument();
  return guarded([&] { return emit(ring_report(p->family, max_degree), out_json); });
}

pp_status pp_polytope_hilbert(const pp_polytope* p, size_t* out, size_t cap, size_t* len) {
  if (!p || !len || (cap && !out)) return null_argument();
  return guarded([&] {
    MPoly vol = volume_polynomial(p->family);
    auto h = hilbert_function(vol.with_vars(used_in_order(vol, p->family.params)));
    *len = h.size();
    if (h.size() > cap) {
      last_error = "hilbert: capacity " + std::to_string(cap) + " < " + std::to_string(h.size());
      return PP_INPUT_ERROR;
    }
    for (std::size_t k = 0; k < h.size(); ++k) out[k] = h[k];
    return PP_OK;
  });
}

pp_status pp_pushpull_verify(const char* spec_json, int fail_fast, char** out_json) {
  if (!out_json) return null_argument();
  return guarded([&] { return emit(pushpull_report(truncation_from_json(parse(spec_json)), fail_fast != 0), out_json); });
}

pp_status pp_gk_report(const char* input_json, unsigned samples, unsigned long long seed, char** out_json) {
  if (!out_json) return null_argument();
  return guarded([&] { return emit(gk_report(gk_from_json(parse(input_json)), samples, seed), out_json); });
}

pp_status pp_fflv_report(const char* input_json, char** out_json) {
  if (!out_json) return null_argument();
  return guarded([&] { return emit(fflv_report(parse(input_json)), out_json); });
}

pp_status pp_tower_report(unsigned samples, unsigned long long seed, char** out_json) {
  if (!out_json) return null_argument();
  return guarded([&] { return emit(tower_report(samples, seed), out_json); });
}

pp_status pp_figures(char** out_json) {
  if (!out_json) return null_argument();
  return guarded([&] { return emit(figures_report(), out_json); });
}

}  // extern "C"
