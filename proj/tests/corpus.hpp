#pragma once

#include <string>

#include "ident/model.hpp"

// Shared model sources used across the test suites.
namespace corpus {

inline const char* two_compartment = R"(model two_compartment
states: x1, x2
params: a01, a12, a21
x1' = -(a01 + a21)*x1 + a12*x2
x2' = a21*x1 - a12*x2
y = x2
)";

inline const char* slow_fast = R"(model slow_fast
states: xA, xB, xC, eps_A, eps_C
params: k1, k2, eps_B
xA' = -k1*xA
xB' = k1*xA - k2*xB
xC' = k2*xB
eps_A' = 0
eps_C' = 0
y1 = xC
y2 = eps_A*xA + eps_B*xB + eps_C*xC
y3 = eps_A
y4 = eps_C
)";

// x' = 0, y1 = a*x + b, y2 = x
inline const char* linear_pair = R"(model linear_pair
states: x
params: a, b
x' = 0
y1 = a*x + b
y2 = x
)";

// x1' = 0, y1 = x1, y2 = mu1*x1 + mu2
inline const char* offset_line = R"(model offset_line
states: x1
params: mu1, mu2
x1' = 0
y1 = x1
y2 = mu1*x1 + mu2
)";

// x1' = 0, y1 = x1, y2 = theta*x1 + theta^2
inline const char* theta_line = R"(model theta_line
states: x1
params: theta
x1' = 0
y1 = x1
y2 = theta*x1 + theta^2
)";

inline const char* driven_integrator = R"(model driven_integrator
states: x
params: p
inputs: u
x' = p*u
y = x
)";

inline const char* saturating = R"(model saturating
states: x
params: v, k
x' = v*x/(k + x)
y = x
)";

inline ident::ODEModel load(const char* src) { return ident::parse_model(src); }

}  // namespace corpus
