#include <gtest/gtest.h>

#include "stickforge/laurent.hpp"

using stickforge::LaurentPoly;

TEST(Laurent, AddsAndCancelsTerms) {
  LaurentPoly p{{2, 3}, {-1, 1}};
  p.add_term(2, -3);
  EXPECT_EQ(p, LaurentPoly::monomial(-1));
  p.add_term(-1, -1);
  EXPECT_TRUE(p.is_zero());
}

TEST(Laurent, MultipliesAndDividesExactly) {
  const LaurentPoly delta{{-2, -1}, {2, -1}};
  const LaurentPoly q{{-3, 2}, {0, -1}, {5, 7}};
  EXPECT_EQ((q * delta).divided_exactly_by(delta), q);
  EXPECT_THROW((q + 1).divided_exactly_by(LaurentPoly{{0, 2}, {1, 2}}), std::domain_error);
}

TEST(Laurent, EvaluatesAtUnitsWithNegativeExponents) {
  const LaurentPoly trefoil{{-1, 1}, {0, -1}, {1, 1}};
  EXPECT_EQ(trefoil.evaluate(-1), -3);
  EXPECT_EQ(trefoil.evaluate(1), 1);
  EXPECT_THROW(trefoil.evaluate(2), std::domain_error);
}

TEST(Laurent, SerializationRoundTrips) {
  const LaurentPoly p{{-16, -1}, {-12, 1}, {-4, 1}};
  EXPECT_EQ(p.serialize(), "-16:-1,-12:1,-4:1");
  EXPECT_EQ(LaurentPoly::deserialize(p.serialize()), p);
  EXPECT_EQ(LaurentPoly::deserialize(""), LaurentPoly{});
  EXPECT_THROW(LaurentPoly::deserialize("3"), std::invalid_argument);
}

TEST(Laurent, PrintsReadably) {
  EXPECT_EQ((LaurentPoly{{-4, 1}, {0, -2}, {4, 3}}).to_string(), "A^-4 - 2 + 3*A^4");
  EXPECT_EQ(LaurentPoly{}.to_string(), "0");
}

TEST(Laurent, SubstitutesPowers) {
  const LaurentPoly p{{1, 2}, {3, -1}};
  EXPECT_EQ(p.substitute_power(-1), (LaurentPoly{{-1, 2}, {-3, -1}}));
  EXPECT_EQ(p.scaled(2, -1), (LaurentPoly{{3, -2}, {5, 1}}));
}
