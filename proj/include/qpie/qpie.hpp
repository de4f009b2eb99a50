#pragma once

#include "qpie/circuit.hpp"
#include "qpie/error.hpp"
#include "qpie/image.hpp"
#include "qpie/json.hpp"
#include "qpie/qasm.hpp"
#include "qpie/real_state.hpp"
#include "qpie/simulator.hpp"
#include "qpie/synthesis.hpp"
#include "qpie/tolerance.hpp"
