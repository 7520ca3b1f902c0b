package fixtures.delta;

public class Geometry {

    public static class Box {
        final int width;
        final int height;
        final boolean tall;

        Box(int width, int height, boolean tall) {
            this.width = width;
            this.height = height;
            this.tall = tall;
        }

        int area() {
            return width * height;
        }

        boolean wider(Box other) {
            return width > other.width;
        }
    }

    public Box classify(int width, int height) {
        return new Box(width, height, height > width);
    }

    public Box normalized(int width, int height) {
        return new Box(width < 1 ? 1 : width, height < 1 ? 1 : height, false);
    }

    public boolean contains(int x, int y, int w, int h, int px, int py) {
        return px >= x && px < x + w && py >= y && py < y + h;
    }

    public boolean overlapsRange(int aStart, int aEnd, int bStart, int bEnd) {
        if (aEnd < bStart) {
            return false;
        }
        if (bEnd < aStart) {
            return false;
        }
        return true;
    }

    public int manhattan(int x1, int y1, int x2, int y2) {
        int dx = x1 > x2 ? x1 - x2 : x2 - x1;
        int dy = y1 > y2 ? y1 - y2 : y2 - y1;
        return dx + dy;
    }

    public int snapToGrid(int coordinate, int cell) {
        int remainder = coordinate % cell;
        if (remainder >= cell / 2) {
            return coordinate + cell - remainder;
        }
        return coordinate - remainder;
    }

    public double scaleFactor(double available, double needed) {
        assert needed > 0.0;
        double factor = available / needed;
        return factor >= 1.0 ? 1.0 : factor;
    }

    public int perimeterSteps(int w, int h) {
        int steps = 0;
        for (int i = 0; i < w; i++) {
            steps++;
        }
        for (int j = 0; j < h; j++) {
            steps++;
        }
        return steps * 2;
    }

    public boolean fitsInside(Box inner, Box outer) {
        return inner.width <= outer.width && inner.height <= outer.height;
    }

    public int clampIndex(int index, int size) {
        if (index < 0) {
            return 0;
        }
        if (index >= size) {
            return size - 1;
        }
        return index;
    }

    public long diagonalSquares(int n) {
        long count = 0L;
        for (int row = 0; row < n; row++) {
            for (int col = 0; col < n; col++) {
                if (row == col) {
                    count++;
                }
            }
        }
        return count;
    }
}
