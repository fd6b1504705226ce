#pragma once

#include <string>

#include "curvelab/invariants.hpp"

namespace curvelab {

// Monic modulus of the field as a polynomial in x ("x" itself for prime
// fields).
std::string modulus_text(const Field& f);

// Stable-schema JSON rendering of a report:
// {field:{p,s,modulus}, curve:{degree,text}, counts:{Mq,MqS,Bq,N1},
//  genus:{g_star,g,certified}, frobenius:{fnc,epsilon2,confidence,nu,seed},
//  singular:[{point,mP,delta,ordinary,branches:[{j1,s,linear,tame,rational}]}],
//  bounds:{hv,sv,main,hw_genus,hw_arith}, verdicts:[{id,holds,equality,notes}]}
// g is an integer when certified, else [g_lo, g_hi]; gated-out verdicts have
// holds = null; bounds needing an exact genus are null when uncertain.
std::string render_json(const CurveReport& r, bool pretty = true);

std::string render_text(const CurveReport& r);

}  // namespace curvelab
