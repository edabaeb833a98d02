#include "oscul/oscul.h"

#include <cstring>
#include <map>
#include <memory>
#include <string>

#include "oscul/errors.hpp"
#include "oscul/report.hpp"
#include "oscul/schubert.hpp"

struct osc_result {
  oscul::CommandResult rep;
  std::string json;
  mutable std::map<std::string, std::string> fields;
};

struct osc_class {
  oscul::CohClass value;
};

namespace {

thread_local std::string last_error;

osc_status fail(osc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

oscul::FieldKind field_of(osc_field f) {
  return f == OSC_FIELD_RATIONAL ? oscul::FieldKind::Rational : oscul::FieldKind::Prime;
}

template <class Fn>
osc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const oscul::PreconditionError& e) {
    return fail(OSC_ERR_PRECONDITION, e.what());
  } catch (const oscul::Error& e) {
    return fail(OSC_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(OSC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(OSC_ERR_INTERNAL, "unknown error");
  }
}

template <class Fn>
osc_status produce(osc_result** out, Fn&& fn) {
  if (!out) return fail(OSC_ERR_USAGE, "output pointer is NULL");
  *out = nullptr;
  return guarded([&]() -> osc_status {
    auto r = std::make_unique<osc_result>();
    r->rep = fn();
    r->json = r->rep.json_string();
    const bool passed = r->rep.passed;
    *out = r.release();
    if (!passed) {
      last_error = "verification failed";
      return OSC_ERR_VERIFICATION_FAILED;
    }
    last_error.clear();
    return OSC_OK;
  });
}

osc_status write_string(const std::string& s, char* buf, size_t buf_len, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || buf_len < s.size() + 1) return fail(OSC_ERR_USAGE, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return OSC_OK;
}

}  // namespace

extern "C" {

const char* osc_version(void) { return "0.1.0"; }

const char* osc_status_string(osc_status status) {
  switch (status) {
    case OSC_OK:
      return "ok";
    case OSC_ERR_USAGE:
      return "usage error";
    case OSC_ERR_PRECONDITION:
      return "precondition violated";
    case OSC_ERR_VERIFICATION_FAILED:
      return "verification failed";
    case OSC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* osc_last_error(void) { return last_error.c_str(); }

osc_status osc_count_lines(int n, int d, int check, uint64_t seed, osc_result** out) {
  return produce(out, [&] { return oscul::run_count_lines(n, d, check != 0, seed); });
}

osc_status osc_count_lines_table(int n_min, int n_max, int check, uint64_t seed, osc_result** out) {
  return produce(out, [&] { return oscul::run_count_lines_table(n_min, n_max, check != 0, seed); });
}

osc_status osc_numerology(int n, int k, osc_result** out) {
  return produce(out, [&] { return oscul::run_numerology(n, k); });
}

osc_status osc_osculating(int n, int d, int r, osc_result** out) {
  return produce(out, [&] { return oscul::run_osculating(n, d, r); });
}

osc_status osc_canonical(int n, int d, osc_result** out) {
  return produce(out, [&] { return oscul::run_canonical(n, d); });
}

osc_status osc_swept_degree(int n, int d, osc_result** out) {
  return produce(out, [&] { return oscul::run_swept_degree(n, d); });
}

osc_status osc_oracle(int n, int d, uint64_t seed, osc_result** out) {
  return produce(out, [&] { return oscul::run_oracle(n, d, seed); });
}

osc_status osc_verify_gg_pn(int n, int d, int samples, osc_field field, uint64_t seed, osc_result** out) {
  return produce(out, [&] { return oscul::run_verify_gg_pn(n, d, samples, field_of(field), seed); });
}

osc_status osc_verify_gg_gr(int n, int lines, int group_elements, osc_field field, uint64_t seed,
                            osc_result** out) {
  return produce(out, [&] { return oscul::run_verify_gg_gr(n, lines, group_elements, field_of(field), seed); });
}

osc_status osc_verify_wedge2(int n, int d, const int64_t* x, size_t x_len, osc_field field, uint64_t seed,
                             size_t budget, osc_result** out) {
  if (x_len > 0 && !x) return fail(OSC_ERR_USAGE, "point pointer is NULL");
  std::vector<std::int64_t> pt(x, x + x_len);
  return produce(out, [&] { return oscul::run_verify_wedge2(n, d, pt, field_of(field), seed, budget); });
}

osc_status osc_verify_lemma_linalg(int dim_w, int dim_k, int trials, osc_field field, uint64_t seed,
                                   osc_result** out) {
  return produce(out, [&] { return oscul::run_verify_lemma_linalg(dim_w, dim_k, trials, field_of(field), seed); });
}

osc_status osc_verify_contact(int n, int d, int samples, osc_field field, uint64_t seed, osc_result** out) {
  return produce(out, [&] { return oscul::run_verify_contact(n, d, samples, field_of(field), seed); });
}

const char* osc_result_command(const osc_result* r) { return r ? r->rep.command.c_str() : nullptr; }
const char* osc_result_json(const osc_result* r) { return r ? r->json.c_str() : nullptr; }
const char* osc_result_text(const osc_result* r) { return r ? r->rep.text.c_str() : nullptr; }
int osc_result_passed(const osc_result* r) { return r && r->rep.passed ? 1 : 0; }

const char* osc_result_get(const osc_result* r, const char* key) {
  if (!r || !key) return nullptr;
  auto cached = r->fields.find(key);
  if (cached != r->fields.end()) return cached->second.c_str();
  const auto& res = r->rep.result;
  auto it = res.find(key);
  if (it == res.end()) return nullptr;
  std::string text = it->is_string() ? it->get<std::string>() : it->dump();
  return r->fields.emplace(key, std::move(text)).first->second.c_str();
}

void osc_result_free(osc_result* r) { delete r; }

osc_status osc_class_schubert(int m, int N, const int* parts, size_t len, osc_class** out) {
  if (!out) return fail(OSC_ERR_USAGE, "output pointer is NULL");
  *out = nullptr;
  if (len > 0 && !parts) return fail(OSC_ERR_USAGE, "parts pointer is NULL");
  return guarded([&] {
    const oscul::GrassCtx ctx(m, N);
    *out = new osc_class{oscul::CohClass::schubert(ctx, oscul::Partition(std::vector<int>(parts, parts + len)))};
    return OSC_OK;
  });
}

osc_status osc_class_add(const osc_class* a, const osc_class* b, osc_class** out) {
  if (!out || !a || !b) return fail(OSC_ERR_USAGE, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new osc_class{a->value + b->value};
    return OSC_OK;
  });
}

osc_status osc_class_mul(const osc_class* a, const osc_class* b, osc_class** out) {
  if (!out || !a || !b) return fail(OSC_ERR_USAGE, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new osc_class{oscul::schubert_mul(a->value, b->value)};
    return OSC_OK;
  });
}

osc_status osc_class_integrate(const osc_class* c, char* buf, size_t buf_len, size_t* needed) {
  if (!c) return fail(OSC_ERR_USAGE, "NULL class");
  return write_string(oscul::to_string(oscul::integrate(c->value)), buf, buf_len, needed);
}

osc_status osc_class_string(const osc_class* c, char* buf, size_t buf_len, size_t* needed) {
  if (!c) return fail(OSC_ERR_USAGE, "NULL class");
  return write_string(c->value.str(), buf, buf_len, needed);
}

void osc_class_free(osc_class* c) { delete c; }

}  // extern "C"
