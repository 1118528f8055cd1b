#ifndef EPIST_EPIST_HPP
#define EPIST_EPIST_HPP

#include "epist/alphabet.hpp"
#include "epist/conjugacy.hpp"
#include "epist/decompose.hpp"
#include "epist/errors.hpp"
#include "epist/format.hpp"
#include "epist/language.hpp"
#include "epist/morphism.hpp"
#include "epist/palindromic.hpp"
#include "epist/preservation.hpp"
#include "epist/rauzy.hpp"
#include "epist/returns.hpp"
#include "epist/spinned.hpp"
#include "epist/word.hpp"

#endif
