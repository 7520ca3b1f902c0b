package fixtures.alpha;

public class Validation {

    public boolean inRange(int value, int low, int high) {
        return value >= low && value <= high;
    }

    public boolean isAdult(int age) {
        return age >= 18;
    }

    public boolean fitsBuffer(byte[] payload, int capacity) {
        return payload.length < capacity;
    }

    public boolean tooLong(String name, int max) {
        return name.length() > max;
    }

    public void checkPositive(int amount) {
        assert amount > 0;
    }

    public void checkCapacity(int used, int total) {
        assert used <= total : "capacity exceeded";
    }

    public void checkWindow(long start, long end) {
        assert start < end : "window is inverted";
    }

    public int clampLow(int value, int floor) {
        if (value < floor) {
            return floor;
        }
        return value;
    }

    public int clampHigh(int value, int ceiling) {
        if (value > ceiling) {
            return ceiling;
        }
        return value;
    }

    public String gradeOf(int score) {
        if (score >= 90) {
            return "A";
        }
        if (score >= 75) {
            return "B";
        }
        return "C";
    }

    public boolean strictlyOrdered(int a, int b, int c) {
        if (a < b && b < c) {
            return true;
        }
        return false;
    }

    public int signOf(long delta) {
        return delta < 0L ? -1 : 1;
    }

    public int padWidth(String cell, int width) {
        int missing = width - cell.length();
        return missing > 0 ? missing : 0;
    }

    public String describe(int errors) {
        String label = errors <= 1 ? "stable" : "degraded";
        return label;
    }
}
