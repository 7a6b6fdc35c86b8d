#pragma once

// Convenience include for the whole library.

#include "graphalg/canonical.hpp"
#include "graphalg/connmat.hpp"
#include "graphalg/corpus.hpp"
#include "graphalg/counting.hpp"
#include "graphalg/flow.hpp"
#include "graphalg/hom.hpp"
#include "graphalg/io_json.hpp"
#include "graphalg/labeled_graph.hpp"
#include "graphalg/linalg.hpp"
#include "graphalg/parallel.hpp"
#include "graphalg/parameter.hpp"
#include "graphalg/psd.hpp"
#include "graphalg/quantum.hpp"
#include "graphalg/rational.hpp"
#include "graphalg/stepfunc.hpp"
#include "graphalg/synth.hpp"
#include "graphalg/tutte.hpp"
#include "graphalg/weighted_graph.hpp"
