#include <doctest.h>

#include <string>
#include <vector>

#include "oscul/oscul.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(osc_version()) == "0.1.0");
  CHECK(std::string(osc_status_string(OSC_OK)) == "ok");
  CHECK(osc_status_string(OSC_ERR_VERIFICATION_FAILED) != nullptr);
}

TEST_CASE("count_lines through the C API") {
  osc_result* r = nullptr;
  REQUIRE(osc_count_lines(4, 5, 1, 1, &r) == OSC_OK);
  REQUIRE(r != nullptr);
  CHECK(std::string(osc_result_command(r)) == "count-lines");
  CHECK(std::string(osc_result_get(r, "count")) == "2875");
  CHECK(osc_result_get(r, "no-such-key") == nullptr);
  CHECK(osc_result_passed(r) == 1);
  const std::string json = osc_result_json(r);
  CHECK(json.find("\"both-agree\"") != std::string::npos);
  CHECK(json.find("elapsed") == std::string::npos);
  osc_result_free(r);
}

TEST_CASE("identical calls give identical JSON") {
  osc_result *a = nullptr, *b = nullptr;
  REQUIRE(osc_verify_lemma_linalg(4, 2, 50, OSC_FIELD_PRIME, 7, &a) == OSC_OK);
  REQUIRE(osc_verify_lemma_linalg(4, 2, 50, OSC_FIELD_PRIME, 7, &b) == OSC_OK);
  CHECK(std::string(osc_result_json(a)) == std::string(osc_result_json(b)));
  osc_result_free(a);
  osc_result_free(b);
}

TEST_CASE("precondition errors leave out NULL and set the message") {
  osc_result* r = reinterpret_cast<osc_result*>(0x1);
  CHECK(osc_numerology(1, 0, &r) == OSC_ERR_PRECONDITION);
  CHECK(r == nullptr);
  CHECK(std::string(osc_last_error()).size() > 0);
  CHECK(osc_osculating(3, 9, 6, &r) == OSC_ERR_PRECONDITION);
  CHECK(osc_count_lines(3, 3, 0, 1, nullptr) == OSC_ERR_USAGE);
}

TEST_CASE("failed verification still returns a report") {
  osc_result* r = nullptr;
  CHECK(osc_verify_gg_gr(3, 3, 1, OSC_FIELD_PRIME, 1, &r) == OSC_ERR_VERIFICATION_FAILED);
  REQUIRE(r != nullptr);
  CHECK(osc_result_passed(r) == 0);
  osc_result_free(r);
}

TEST_CASE("Schubert classes through handles") {
  const int one[] = {1};
  osc_class* s1 = nullptr;
  REQUIRE(osc_class_schubert(2, 4, one, 1, &s1) == OSC_OK);
  osc_class* p = nullptr;
  REQUIRE(osc_class_mul(s1, s1, &p) == OSC_OK);
  char buf[64];
  size_t needed = 0;
  REQUIRE(osc_class_string(p, buf, sizeof buf, &needed) == OSC_OK);
  CHECK(std::string(buf) == "s(1,1) + s(2)");
  osc_class* p4 = nullptr;
  REQUIRE(osc_class_mul(p, p, &p4) == OSC_OK);
  REQUIRE(osc_class_integrate(p4, buf, sizeof buf, &needed) == OSC_OK);
  CHECK(std::string(buf) == "2");
  CHECK(osc_class_integrate(p4, buf, 1, &needed) == OSC_ERR_USAGE);
  CHECK(needed == 2);

  const int big[] = {3};
  osc_class* bad = nullptr;
  CHECK(osc_class_schubert(2, 4, big, 1, &bad) == OSC_ERR_PRECONDITION);
  CHECK(bad == nullptr);
  osc_class* other = nullptr;
  REQUIRE(osc_class_schubert(2, 5, one, 1, &other) == OSC_OK);
  osc_class* mixed = nullptr;
  CHECK(osc_class_add(s1, other, &mixed) == OSC_ERR_PRECONDITION);
  osc_class_free(other);
  osc_class_free(p4);
  osc_class_free(p);
  osc_class_free(s1);
  osc_class_free(nullptr);
  osc_result_free(nullptr);
}

TEST_CASE("wedge2 with an explicit point") {
  const std::int64_t x[] = {1, 0, 0};
  osc_result* r = nullptr;
  REQUIRE(osc_verify_wedge2(2, 1, x, 3, OSC_FIELD_PRIME, 1, 1000000, &r) == OSC_OK);
  CHECK(std::string(osc_result_get(r, "image_rank")) == "1");
  osc_result_free(r);
}
