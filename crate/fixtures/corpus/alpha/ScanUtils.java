package fixtures.alpha;

import java.util.List;

public class ScanUtils {

    public int sumBelow(int[] values, int limit) {
        int total = 0;
        for (int i = 0; i < values.length; i++) {
            if (values[i] < limit) {
                total += values[i];
            }
        }
        return total;
    }

    public int firstNegative(int[] values) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] < 0) {
                return i;
            }
        }
        return -1;
    }

    public void copyPrefix(int[] src, int[] dst, int count) {
        for (int i = 0; i < count; i++) {
            dst[i] = src[i];
        }
    }

    public int countMatches(List<String> names, String needle) {
        int hits = 0;
        for (int i = 0; i < names.size(); i++) {
            if (needle.equals(names.get(i))) {
                hits++;
            }
        }
        return hits;
    }

    public long product(long[] factors) {
        long result = 1L;
        for (int i = 0; i < factors.length; i++) {
            result *= factors[i];
        }
        return result;
    }

    public int lastIndexBelow(int[] values, int bound) {
        int found = -1;
        for (int i = 0; i <= values.length - 1; i++) {
            if (values[i] < bound) {
                found = i;
            }
        }
        return found;
    }

    public double averageTail(double[] samples, int from) {
        double sum = 0.0;
        int seen = 0;
        for (int i = from; i < samples.length; i++) {
            sum += samples[i];
            seen++;
        }
        return seen == 0 ? 0.0 : sum / seen;
    }

    public int stepsUntil(int start, int target) {
        int steps = 0;
        int cursor = start;
        while (cursor < target) {
            cursor += 2;
            steps++;
        }
        return steps;
    }

    public int drainBudget(int budget, int[] costs) {
        int index = 0;
        while (budget > 0 && index < costs.length) {
            budget -= costs[index];
            index++;
        }
        return budget;
    }

    public int halveUntilSmall(int value) {
        int rounds = 0;
        while (value >= 10) {
            value /= 2;
            rounds++;
        }
        return rounds;
    }

    public String compactDigits(String text) {
        StringBuilder sb = new StringBuilder();
        int i = 0;
        while (i < text.length()) {
            char c = text.charAt(i);
            if (c >= '0' && c <= '9') {
                sb.append(c);
            }
            i++;
        }
        return sb.toString();
    }

    public int countdownTicks(int fuel) {
        int ticks = 0;
        do {
            fuel--;
            ticks++;
        } while (fuel > 0);
        return ticks;
    }

    public int pollUntilStable(int reading) {
        int polls = 0;
        do {
            reading = reading / 2 + 1;
            polls++;
        } while (reading >= 4);
        return polls;
    }
}
