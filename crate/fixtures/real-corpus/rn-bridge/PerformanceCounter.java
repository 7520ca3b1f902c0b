/*
 * Copyright (c) Meta Platforms, Inc. and affiliates.
 *
 * This source code is licensed under the MIT license found in the
 * LICENSE file in the root directory of this source tree.
 */

package com.facebook.react.bridge;

import java.util.Map;

public interface PerformanceCounter {

  void profileNextBatch();

  Map<String, Long> getPerformanceCounters();
}
