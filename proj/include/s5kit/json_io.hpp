#pragma once

#include <json.hpp>

#include "s5kit/action.hpp"
#include "s5kit/algebra.hpp"
#include "s5kit/frame.hpp"
#include "s5kit/lifting.hpp"
#include "s5kit/suite.hpp"
#include "s5kit/surjection.hpp"
#include "s5kit/theory.hpp"

// Wire formats. Values serialize to the documented schemas; parsing routes
// through the library constructors so malformed data is rejected with the
// library's own error codes. Law-level validation (functoriality, axioms) is
// deliberately left to the checkers, so deliberately broken structures can be
// read and then reported on.
namespace s5kit {

void to_json(nlohmann::json& j, const Surjection& q);
void from_json(const nlohmann::json& j, Surjection& q);

void to_json(nlohmann::json& j, const SurjectionPushout& p);

void to_json(nlohmann::json& j, const FiniteFrame& f);
void from_json(const nlohmann::json& j, FiniteFrame& f);

void to_json(nlohmann::json& j, const PMorphism& f);
void from_json(const nlohmann::json& j, PMorphism& f);

void to_json(nlohmann::json& j, const ClusterFamily& f);
void from_json(const nlohmann::json& j, ClusterFamily& f);

void to_json(nlohmann::json& j, const FrameCoequalizer& c);
void to_json(nlohmann::json& j, const FrameCoproduct& c);

void to_json(nlohmann::json& j, const S5Algebra& a);
void from_json(const nlohmann::json& j, S5Algebra& a);

void to_json(nlohmann::json& j, const S5AxiomReport& r);

void to_json(nlohmann::json& j, const SymmetricAction& a);
void from_json(const nlohmann::json& j, SymmetricAction& a);

void to_json(nlohmann::json& j, const ActionReport& r);
void to_json(nlohmann::json& j, const OrbitDecomposition& d);
void to_json(nlohmann::json& j, const CanonicalOrbit& o);

void to_json(nlohmann::json& j, const TruncatedPresheaf& p);
void from_json(const nlohmann::json& j, TruncatedPresheaf& p);

void to_json(nlohmann::json& j, const LiftingReport& r);
void to_json(nlohmann::json& j, const NatTransformation& t);

void to_json(nlohmann::json& j, const AxiomInstance& instance);
void to_json(nlohmann::json& j, const AxiomVerdict& v);
void to_json(nlohmann::json& j, const AxiomReport& r);

void to_json(nlohmann::json& j, const CriterionResult& c);
void to_json(nlohmann::json& j, const SuiteResult& r);

}  // namespace s5kit
