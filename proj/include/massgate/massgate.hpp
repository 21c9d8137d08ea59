#pragma once

#include "massgate/config.hpp"
#include "massgate/controller.hpp"
#include "massgate/errors.hpp"
#include "massgate/field.hpp"
#include "massgate/oracle.hpp"
#include "massgate/output.hpp"
#include "massgate/quadrature.hpp"
#include "massgate/runner.hpp"
#include "massgate/stepper.hpp"
#include "massgate/study.hpp"
#include "massgate/tridiag.hpp"
