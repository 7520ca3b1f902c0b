/*
 * Copyright (c) Meta Platforms, Inc. and affiliates.
 *
 * This source code is licensed under the MIT license found in the
 * LICENSE file in the root directory of this source tree.
 */

package com.facebook.perftest;

/** PerfTestConfig stub. */
public class PerfTestConfig {

  public boolean isRunningInPerfTest() {
    return false;
  }
}
