#pragma once

#include "qalg/classify.hpp"
#include "qalg/constructions.hpp"
#include "qalg/corpus.hpp"
#include "qalg/frobenius.hpp"
#include "qalg/io.hpp"
#include "qalg/report.hpp"
#include "qalg/selftest.hpp"
#include "qalg/structure.hpp"
