#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gra/canonical.hpp"
#include "gra/certificate.hpp"
#include "gra/dgla.hpp"
#include "gra/error.hpp"

namespace gra {
namespace {

using namespace gra::testing;

TEST(CertificateTest, LoneTermIsResidual) {
  RawSum s;
  s.add(1, edge());
  const PairingCertificate cert = cancellation_certificate(s);
  EXPECT_TRUE(cert.pairs.empty());
  EXPECT_EQ(cert.residual, std::vector<std::size_t>{0});
  EXPECT_TRUE(verify_certificate(s, cert));
}

TEST(CertificateTest, RequiresUnitCoefficients) {
  RawSum s;
  s.add(2, edge());
  EXPECT_THROW(cancellation_certificate(s), InvariantError);
}

TEST(CertificateTest, PairsOppositeRelabeledTerms) {
  RawSum s;
  s.add(1, k4());
  s.add(1, k4_reversed());
  s.add(-1, relabel(k4(), VertexPermutation({1, 2, 3, 0})));
  s.add(-1, k4_reversed());
  const PairingCertificate cert = cancellation_certificate(s);
  EXPECT_TRUE(cert.identically_zero());
  EXPECT_EQ(cert.pairs.size(), 2u);
  EXPECT_TRUE(verify_certificate(s, cert));
}

TEST(CertificateTest, EqualTermsDoNotPair) {
  RawSum s;
  s.add(1, k4());
  s.add(1, k4());
  const PairingCertificate cert = cancellation_certificate(s);
  EXPECT_EQ(cert.residual.size(), 2u);
  EXPECT_TRUE(verify_certificate(s, cert));
}

TEST(CertificateTest, ZeroGraphsPairWithEitherSign) {
  RawSum s;
  s.add(1, triangle());
  s.add(1, triangle());
  s.add(-1, square());
  s.add(1, square());
  s.add(1, path3());
  const PairingCertificate cert = cancellation_certificate(s);
  EXPECT_EQ(cert.pairs.size(), 2u);
  EXPECT_EQ(cert.residual, std::vector<std::size_t>{4});
  EXPECT_TRUE(verify_certificate(s, cert));
}

TEST(CertificateTest, VerifierRejectsForgeries) {
  RawSum s;
  s.add(1, k4());
  s.add(1, k4());
  PairingCertificate forged;
  forged.pairs.push_back({0, 1, VertexPermutation::identity(4)});
  EXPECT_FALSE(verify_certificate(s, forged));

  PairingCertificate missing;
  missing.residual = {0};
  EXPECT_FALSE(verify_certificate(s, missing));

  PairingCertificate twice;
  twice.residual = {0, 0, 1};
  EXPECT_FALSE(verify_certificate(s, twice));

  RawSum t;
  t.add(1, triangle());
  t.add(-1, square());
  PairingCertificate mismatch;
  mismatch.pairs.push_back({0, 1, VertexPermutation::identity(3)});
  EXPECT_FALSE(verify_certificate(t, mismatch));
}

TEST(CertificateTest, DoubleDifferentialOfTriangle) {
  const RawSum dd = d_direct_squared(triangle());
  EXPECT_FALSE(dd.empty());
  const PairingCertificate cert = cancellation_certificate(dd);
  EXPECT_TRUE(cert.identically_zero());
  EXPECT_TRUE(verify_certificate(dd, cert));
}

TEST(CertificateTest, JacobiatorOfEdges) {
  const RawSum jac = jacobiator(edge(), edge(), edge());
  const PairingCertificate cert = cancellation_certificate(jac);
  EXPECT_TRUE(cert.identically_zero());
  EXPECT_TRUE(verify_certificate(jac, cert));
}

TEST(CertificateTest, PairingImpliesReducedZero) {
  for (const Graph& g : enumerate_graphs_up_to(4, {.leafless = true})) {
    const RawSum dd = d_direct_squared(g);
    if (cancellation_certificate(dd).identically_zero()) EXPECT_TRUE(reduce(dd).empty());
  }
}

}  // namespace
}  // namespace gra
