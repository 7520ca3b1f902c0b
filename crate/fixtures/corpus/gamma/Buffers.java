package fixtures.gamma;

import java.util.ArrayList;
import java.util.List;

public class Buffers {

    private final List<int[]> pool = new ArrayList<>();

    public int[] acquire(int size) {
        for (int i = 0; i < pool.size(); i++) {
            if (pool.get(i).length >= size) {
                return pool.remove(i);
            }
        }
        return new int[size];
    }

    public void release(int[] buffer, int keepLimit) {
        if (pool.size() < keepLimit) {
            pool.add(buffer);
        }
    }

    public int fill(int[] buffer, int value, int upto) {
        int written = 0;
        for (int i = 0; i < upto && i < buffer.length; i++) {
            buffer[i] = value;
            written++;
        }
        return written;
    }

    public boolean[] boundsFlags(int cursor, int size) {
        boolean[] flags = {cursor < size, cursor > 0};
        return flags;
    }

    public Object boxedComparison(int a, int b) {
        return (Object) (a < b);
    }

    public int grow(int current) {
        int next = current * 2;
        if (next <= current) {
            next = current + 1;
        }
        return next;
    }

    public int shrinkRounds(int capacity, int floor) {
        int rounds = 0;
        do {
            capacity = capacity / 2;
            rounds++;
        } while (capacity > floor);
        return rounds;
    }

    public void compact(int live) {
        int scans = 0;
        do {
            scans++;
        } while (scans <= live);
    }

    public int checksum(byte[] data) {
        int sum = 0;
        for (int i = 0; i < data.length; i++) {
            sum = sum * 31 + data[i];
        }
        return sum;
    }

    public int indexOfRun(int[] data, int runLength) {
        int run = 0;
        for (int i = 0; i < data.length; i++) {
            run = data[i] == 0 ? run + 1 : 0;
            if (run >= runLength) {
                return i - runLength + 1;
            }
        }
        return -1;
    }

    public String sizeClass(int bytes) {
        switch (bytes / 1024) {
            case 0:
                return "tiny";
            case 1:
            case 2:
                return bytes > 1536 ? "medium" : "small";
            default:
                return "large";
        }
    }

    public int saturatingAdd(int a, int b) {
        long wide = (long) a + (long) b;
        if (wide > Integer.MAX_VALUE) {
            return Integer.MAX_VALUE;
        }
        return (int) wide;
    }

    public int trailingZeros(int word) {
        int zeros = 0;
        while ((word & 1) == 0 && zeros < 32) {
            word >>= 1;
            zeros++;
        }
        return zeros;
    }

    public void assertAligned(long address, int alignment) {
        assert address % alignment == 0 && alignment > 0;
    }
}
