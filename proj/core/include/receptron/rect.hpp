/* receptron: threshold logic units with input-dependent weight functions
 * Copyright (C) 2026 The receptron authors
 * MIT License (see LICENSE)
 */

/*!
  \file rect.hpp
  \brief Rectangular interval predicates
*/

#pragma once

namespace receptron
{

/*! \brief Indicator of an open interval of width `width` centered at `center`

  Evaluates to true exactly when |x - center| / width < 1/2.  Points on the
  boundary (|x - center| / width == 1/2, exact IEEE comparison) are outside;
  no epsilon band is applied anywhere.
*/
class rect_predicate
{
public:
  rect_predicate( double center, double width );

  double center() const { return center_; }
  double width() const { return width_; }

  /*! \brief True iff x lies strictly inside the interval (throws on non-finite x) */
  bool contains( double x ) const;

  /*! \brief True iff x sits exactly on either interval edge */
  bool on_boundary( double x ) const;

  friend bool operator==( const rect_predicate& a, const rect_predicate& b )
  {
    return a.center_ == b.center_ && a.width_ == b.width_;
  }

private:
  double center_;
  double width_;
};

} // namespace receptron
