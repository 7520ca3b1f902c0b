package fixtures.beta;

import java.util.List;

public class Metrics {

    private int ceilingHits;
    private boolean saturated;

    public void recordSample(int sample, int ceiling) {
        boolean above = sample > ceiling;
        if (above) {
            ceilingHits++;
        }
    }

    public void updateSaturation(int load, int limit) {
        saturated = load >= limit;
    }

    public void markIfCold(int temperature) {
        boolean cold = (temperature < -10);
        saturated = cold;
    }

    public boolean lastWindowBusy(int[] window) {
        boolean busy = window[window.length - 1] > 80;
        return busy;
    }

    public int busyDays(int[] loads) {
        int days = 0;
        for (int load : loads) {
            days += load > 50 ? 1 : 0;
        }
        return days;
    }

    public void alertWhenLow(int level) {
        notifyOps(level < 5);
    }

    public void reportBoth(int cpu, int mem) {
        logPair(cpu >= 90, mem >= 90);
    }

    public String formatHint(int width) {
        return pad(width > 12 ? "wide" : "narrow");
    }

    private void notifyOps(boolean urgent) {
        if (urgent) {
            ceilingHits++;
        }
    }

    private void logPair(boolean first, boolean second) {
        if (first && second) {
            ceilingHits += 2;
        }
    }

    private String pad(String token) {
        return token;
    }

    public Threshold baselineFor(int p99) {
        return new Threshold(p99 > 200);
    }

    public Threshold tightened(int p50, int margin) {
        return new Threshold(p50 + margin >= 100);
    }

    public int compareLoads(List<Integer> a, List<Integer> b) {
        int i = 0;
        while (i < a.size() && i < b.size()) {
            if (a.get(i) < b.get(i)) {
                return -1;
            }
            if (a.get(i) > b.get(i)) {
                return 1;
            }
            i++;
        }
        return 0;
    }

    static class Threshold {
        final boolean strict;

        Threshold(boolean strict) {
            this.strict = strict;
        }

        boolean appliesTo(int value) {
            return strict ? value >= 0 : value > 0;
        }
    }
}
