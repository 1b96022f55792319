#pragma once

#include <json.hpp>

#include "burau/braid.hpp"
#include "burau/classifier.hpp"
#include "burau/exact_reals.hpp"
#include "burau/forensics.hpp"
#include "burau/intpoly.hpp"
#include "burau/laurent.hpp"
#include "burau/moebius.hpp"
#include "burau/pingpong.hpp"
#include "burau/representation.hpp"

namespace burau {

// Insertion-ordered so that output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const BoundaryPoint& p);
Json to_json(const BraidWord& w);
/// Dense ascending coefficients from low_degree; integers as decimal strings.
Json to_json(const LaurentPoly& p);
Json to_json(const LaurentMatrix& m);
Json to_json(const IntPoly& p);
Json to_json(const RootInterval& r);
Json to_json(const RealMatrix& m);

Json to_json(const IsometryClass& c);
Json to_json(const FixedPoints& f);
Json to_json(const RotationData& r);
Json to_json(const OrbitEvidence& o);
Json to_json(const CommutatorTraceCheck& c);
Json to_json(const PingPongCertificate& c);
Json to_json(const SquierForm& f);

Json to_json(const SpecializationVerdict& v);

Json to_json(const UnfaithfulnessCertificate& c);
Json to_json(const KernelPairCheck& k);
Json to_json(const UnipotentExtension& u);
Json to_json(const GaloisCertificate& g);

}  // namespace burau
