#pragma once

#include <vector>

#include <json.hpp>

#include "plumbstein/cf.hpp"
#include "plumbstein/embedding.hpp"
#include "plumbstein/plumbing.hpp"
#include "plumbstein/stein.hpp"
#include "plumbstein/torsion.hpp"
#include "plumbstein/wrap.hpp"

namespace plumbstein {

using json = nlohmann::ordered_json;

// Objects that carry their graph refer to vertices by id. Standalone records
// (tori, decompositions) take the graph as context.

/// Integers fitting in 64 bits are JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& n);
Integer integer_from_json(const json& j);

void to_json(json& j, const PlumbingGraph& g);
void from_json(const json& j, PlumbingGraph& g);

void to_json(json& j, const ValidationReport& r);
void from_json(const json& j, ValidationReport& r);

void to_json(json& j, const Fraction& f);
void from_json(const json& j, Fraction& f);

void to_json(json& j, const ContinuedFraction& c);
void from_json(const json& j, ContinuedFraction& c);

void to_json(json& j, const GluingMatrix& m);
void from_json(const json& j, GluingMatrix& m);

void to_json(json& j, const ChainIdentityReport& r);
void from_json(const json& j, ChainIdentityReport& r);

void to_json(json& j, const PlanarEmbedding& e);
void from_json(const json& j, PlanarEmbedding& e);

void to_json(json& j, const DualGraph& d);
void from_json(const json& j, DualGraph& d);

void to_json(json& j, const HamPath& p);
void from_json(const json& j, HamPath& p);

void to_json(json& j, const WrappedForm& w);
void from_json(const json& j, WrappedForm& w);

void to_json(json& j, const HandlebodyDiagram& h);
void from_json(const json& j, HandlebodyDiagram& h);

void to_json(json& j, const LegendrianDiagram& d);
void from_json(const json& j, LegendrianDiagram& d);

void to_json(json& j, const FamilyY& y);
void from_json(const json& j, FamilyY& y);

void to_json(json& j, const TwistingAssignment& a);
void from_json(const json& j, TwistingAssignment& a);

json tori_to_json(const PlumbingGraph& g, const std::vector<TorusClass>& tori);
std::vector<TorusClass> tori_from_json(const PlumbingGraph& g, const json& j);

json decomposition_to_json(const PlumbingGraph& g, const Decomposition& d);
Decomposition decomposition_from_json(const PlumbingGraph& g, const json& j);

}  // namespace plumbstein
