#include <doctest.h>

#include "heron/error.hpp"
#include "heron/record.hpp"
#include "support/errors.hpp"

using namespace heron;

TEST_CASE("record line format") {
  Record r;
  r.add("op", "triangle.recover").add("p", Rational(2)).add("q", Rational(1, 4)).add("detail", "a \"quoted\" = x\\y");
  CHECK(r.to_line() == R"(op=triangle.recover p=2 q=1/4 detail="a \"quoted\" = x\\y")");
  Record back = Record::parse_line(r.to_line());
  CHECK(back.fields() == r.fields());
  CHECK(back.rational("q") == Rational(1, 4));
  CHECK_FALSE(back.get("missing").has_value());
  CHECK(heron::testing::code_of([&] { back.rational("op"); }) == ErrorCode::parse);

  CHECK(r.to_tsv_header() == "op\tp\tq\tdetail");
  CHECK(Record().add("k", "").to_line() == "k=\"\"");
}

TEST_CASE("malformed record lines") {
  for (const char* bad : {"novalue", "=x", "k=\"open", "k=\"x\\"})
    CHECK_MESSAGE(heron::testing::code_of([&] { Record::parse_line(bad); }) == ErrorCode::parse, bad);
}
