#include "xiggc/numtheory.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace xiggc;
namespace nt = xiggc::numtheory;

TEST(Sieve, FlagsPrimesCorrectly) {
  auto is_prime = nt::sieve(100);
  ASSERT_EQ(is_prime.size(), 101u);
  EXPECT_FALSE(is_prime[0]);
  EXPECT_FALSE(is_prime[1]);
  EXPECT_TRUE(is_prime[2]);
  EXPECT_TRUE(is_prime[3]);
  EXPECT_FALSE(is_prime[4]);
  EXPECT_TRUE(is_prime[97]);
  EXPECT_FALSE(is_prime[99]);
  int count = 0;
  for (bool b : is_prime) count += b;
  EXPECT_EQ(count, 25);  // pi(100)
  EXPECT_THROW(nt::sieve(-1), std::invalid_argument);
}

TEST(VonMangoldt, PrimePowersOnly) {
  EXPECT_EQ(nt::von_mangoldt(1), 0.0);
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(2), std::log(2.0));
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(3), std::log(3.0));
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(4), std::log(2.0));
  EXPECT_EQ(nt::von_mangoldt(6), 0.0);
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(8), std::log(2.0));
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(9), std::log(3.0));
  EXPECT_EQ(nt::von_mangoldt(12), 0.0);
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(27), std::log(3.0));
  EXPECT_EQ(nt::von_mangoldt(36), 0.0);  // 6^2 is not a prime power
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(97), std::log(97.0));
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(1024), std::log(2.0));
  EXPECT_DOUBLE_EQ(nt::von_mangoldt(59049), std::log(3.0));  // 3^10
  EXPECT_EQ(nt::von_mangoldt(100), 0.0);
  EXPECT_THROW(nt::von_mangoldt(0), std::invalid_argument);
}

TEST(MuZetaAtoms, EnumeratesPrimePowersWithLogWeights) {
  AtomicMeasure m = nt::mu_zeta_atoms(2.0, 30);
  // prime powers <= 30: 2,3,4,5,7,8,9,11,13,16,17,19,23,25,27,29
  ASSERT_EQ(m.atoms.size(), 16u);
  m.validate();
  EXPECT_DOUBLE_EQ(m.atoms[0].x, std::log(2.0));
  EXPECT_DOUBLE_EQ(m.atoms[0].w, std::log(2.0));
  EXPECT_DOUBLE_EQ(m.atoms[2].x, std::log(4.0));
  EXPECT_DOUBLE_EQ(m.atoms[2].w, std::log(2.0));  // weight is log of the base prime
  double last = 0.0;
  for (const auto& a : m.atoms) {
    EXPECT_GT(a.x, last);
    last = a.x;
  }
  EXPECT_DOUBLE_EQ(m.atoms.back().x, std::log(29.0));
  EXPECT_THROW(nt::mu_zeta_atoms(2.0, 1), std::invalid_argument);
}

TEST(ChebyshevPsi, MatchesHighPrecisionReferences) {
  EXPECT_NEAR(nt::chebyshev_psi(100), 94.045311229357392246, 1e-10);
  EXPECT_NEAR(nt::chebyshev_psi(1000), 996.68091224717524026, 1e-9);
  // psi(x) <= 1.04 x for x >= 2 underlies the tail bound below
  EXPECT_LT(nt::chebyshev_psi(100000), 1.04 * 100000);
}

TEST(LambdaTailBound, CertifiesDroppedMass) {
  // bound = 1.04 alpha/(alpha-1) cutoff^{1-alpha}, decreasing in the cutoff
  double b1 = nt::lambda_tail_bound(2.0, 1000);
  double b2 = nt::lambda_tail_bound(2.0, 100000);
  EXPECT_GT(b1, b2);
  EXPECT_NEAR(b1, 1.04 * 2.0 * 1e-3, 1e-12);
  EXPECT_THROW(nt::lambda_tail_bound(1.0, 1000), std::domain_error);
  EXPECT_THROW(nt::lambda_tail_bound(0.5, 1000), std::domain_error);
}
