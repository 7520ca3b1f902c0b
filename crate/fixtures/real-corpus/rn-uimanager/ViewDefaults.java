/*
 * Copyright (c) Meta Platforms, Inc. and affiliates.
 *
 * This source code is licensed under the MIT license found in the
 * LICENSE file in the root directory of this source tree.
 */

package com.facebook.react.uimanager;

/** Default property values for Views to be shared between Views and ShadowViews. */
public class ViewDefaults {

  public static final float FONT_SIZE_SP = 14.0f;
  public static final int LINE_HEIGHT = 0;
  public static final int NUMBER_OF_LINES = Integer.MAX_VALUE;
}
