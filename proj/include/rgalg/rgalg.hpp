#pragma once

#include "rgalg/bitset.hpp"
#include "rgalg/command.hpp"
#include "rgalg/config.hpp"
#include "rgalg/fixpoint.hpp"
#include "rgalg/operators.hpp"
#include "rgalg/quotient.hpp"
#include "rgalg/relation.hpp"
#include "rgalg/relcmds.hpp"
#include "rgalg/trace.hpp"
#include "rgalg/universe.hpp"
#include "rgalg/lang/eval.hpp"
#include "rgalg/lang/expr.hpp"
#include "rgalg/lang/parser.hpp"
#include "rgalg/lang/random_expr.hpp"
#include "rgalg/harness/catalogue.hpp"
#include "rgalg/harness/checker.hpp"
#include "rgalg/harness/generator.hpp"
#include "rgalg/harness/law.hpp"
#include "rgalg/harness/report.hpp"
