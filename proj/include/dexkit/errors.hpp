// Copyright (c) 2026 dexkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dexkit {

/// Base class for all dexkit domain errors. CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DEXKIT_ERROR_TYPE(NAME)                              \
  class NAME : public Error {                                \
  public:                                                    \
    explicit NAME(const std::string& m)                      \
        : Error(std::string(#NAME) + ": " + m) {}            \
  }

// se3
DEXKIT_ERROR_TYPE(NearPiRotation);

// kinematics
DEXKIT_ERROR_TYPE(ParseError);
DEXKIT_ERROR_TYPE(CycleDetected);
DEXKIT_ERROR_TYPE(BadLimits);
DEXKIT_ERROR_TYPE(BadAxis);
DEXKIT_ERROR_TYPE(DimensionMismatch);
DEXKIT_ERROR_TYPE(UnknownKeypoint);

// retargeter
DEXKIT_ERROR_TYPE(NonFiniteInput);

// action pipeline
DEXKIT_ERROR_TYPE(DesyncedStreams);
DEXKIT_ERROR_TYPE(ShortEpisode);
DEXKIT_ERROR_TYPE(UnknownEmbodiment);

// flow policy
DEXKIT_ERROR_TYPE(NonFiniteLoss);
DEXKIT_ERROR_TYPE(EmptyValidationSet);

// scaling lab
DEXKIT_ERROR_TYPE(DegenerateDesign);
DEXKIT_ERROR_TYPE(NonPositiveD);
DEXKIT_ERROR_TYPE(ConstantSeries);

// rubric engine
DEXKIT_ERROR_TYPE(UnknownEvent);
DEXKIT_ERROR_TYPE(UnknownMilestone);
DEXKIT_ERROR_TYPE(CreditOverflow);
DEXKIT_ERROR_TYPE(NonMonotoneProgress);
DEXKIT_ERROR_TYPE(EmptyTrials);

// corpus stats
DEXKIT_ERROR_TYPE(EmptyCollection);

#undef DEXKIT_ERROR_TYPE

}  // namespace dexkit
